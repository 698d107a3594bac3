#include "pdbkit/solvers/exact.hpp"

#include <algorithm>
#include <array>

namespace pdbkit {

namespace {

struct ComponentView {
    std::vector<int> vertices; // global ids
    std::vector<PairEdge> pairs;
    std::vector<TripleEdge> triples;
};

std::vector<ComponentView> split_components(const WeightedHypergraph& h) {
    int n_comp = 0;
    const std::vector<int> comp = h.components(&n_comp);
    std::vector<ComponentView> views(n_comp);
    for (int v = 0; v < h.n; ++v)
        views[comp[v]].vertices.push_back(v);
    for (const auto& e : h.pairs)
        views[comp[e.a]].pairs.push_back(e);
    for (const auto& t : h.triples)
        views[comp[t.a]].triples.push_back(t);
    return views;
}

int greedy_matching_value(std::vector<PairEdge> edges, std::vector<char>& used) {
    std::sort(edges.begin(), edges.end(),
              [](const PairEdge& x, const PairEdge& y) { return x.w > y.w; });
    int value = 0;
    for (const auto& e : edges) {
        if (used[e.a] || used[e.b])
            continue;
        used[e.a] = used[e.b] = 1;
        value += e.w;
    }
    return value;
}

struct MatchingSearch {
    const std::vector<PairEdge>& edges;
    std::vector<int> suffix;
    std::vector<char> used;
    std::vector<int> stack;
    std::vector<int> best_set;
    int best = 0;

    explicit MatchingSearch(const std::vector<PairEdge>& e, int n) : edges(e), used(n, 0) {
        suffix.assign(e.size() + 1, 0);
        for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i)
            suffix[i] = suffix[i + 1] + e[i].w;
    }

    void run(std::size_t idx, int acc) {
        if (acc > best) {
            best = acc;
            best_set = stack;
        }
        if (idx >= edges.size() || acc + suffix[idx] <= best)
            return;
        const PairEdge& e = edges[idx];
        if (!used[e.a] && !used[e.b]) {
            used[e.a] = used[e.b] = 1;
            stack.push_back(static_cast<int>(idx));
            run(idx + 1, acc + e.w);
            stack.pop_back();
            used[e.a] = used[e.b] = 0;
        }
        run(idx + 1, acc);
    }
};

struct CoverSearch {
    // Local (component) indexing.
    int m = 0;
    int step = 1;
    std::vector<int> ub;                         // per-vertex value ceiling
    std::vector<std::vector<std::array<int, 4>>> checks; // per vertex: {w, v0, v1, v2(-1)}
    std::vector<int> value;
    int best = 0;

    void run(int i, int sum) {
        if (sum >= best)
            return;
        if (i == m) {
            best = sum;
            return;
        }
        for (int v = 0; v <= ub[i]; v += step) {
            value[i] = v;
            bool ok = true;
            for (const auto& c : checks[i]) {
                int s = value[c[1]] + value[c[2]] + (c[3] >= 0 ? value[c[3]] : 0);
                if (s < c[0]) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                run(i + 1, sum + v);
        }
        value[i] = 0;
    }
};

} // namespace

SolverResult max_weighted_matching(const WeightedHypergraph& h, std::vector<PairEdge>* chosen) {
    if (chosen)
        chosen->clear();
    SolverResult result;
    std::vector<char> greedy_used(h.n, 0);
    for (const auto& view : split_components(h)) {
        if (view.pairs.empty())
            continue;
        if (static_cast<int>(view.vertices.size()) > kSolverComponentCap) {
            result.value += greedy_matching_value(view.pairs, greedy_used);
            result.exact = false;
            continue;
        }
        MatchingSearch search(view.pairs, h.n);
        search.run(0, 0);
        result.value += search.best;
        if (chosen)
            for (int idx : search.best_set)
                chosen->push_back(view.pairs[idx]);
    }
    return result;
}

SolverResult min_weighted_cover(const WeightedHypergraph& h, bool strengthened) {
    SolverResult result;
    for (const auto& view : split_components(h)) {
        if (view.pairs.empty() && view.triples.empty())
            continue;
        if (static_cast<int>(view.vertices.size()) > kSolverComponentCap) {
            // Any vertex-disjoint edge set is a lower bound on every
            // feasible cover, so the matching value is a safe stand-in.
            WeightedHypergraph sub;
            sub.n = h.n;
            sub.pairs = view.pairs;
            result.value += max_weighted_matching(sub).value;
            result.exact = false;
            continue;
        }

        CoverSearch search;
        search.m = static_cast<int>(view.vertices.size());
        search.step = strengthened ? 2 : 1;
        std::vector<int> local(h.n, -1);
        for (int i = 0; i < search.m; ++i)
            local[view.vertices[i]] = i;
        search.ub.assign(search.m, 0);
        search.checks.assign(search.m, {});
        auto round_up = [&](int w) { return (w % search.step) ? w + search.step - (w % search.step) : w; };
        for (const auto& e : view.pairs) {
            const int a = local[e.a], b = local[e.b];
            search.ub[a] = std::max(search.ub[a], round_up(e.w));
            search.ub[b] = std::max(search.ub[b], round_up(e.w));
            search.checks[std::max(a, b)].push_back({e.w, a, b, -1});
        }
        for (const auto& t : view.triples) {
            const int a = local[t.a], b = local[t.b], c = local[t.c];
            search.ub[a] = std::max(search.ub[a], round_up(t.w));
            search.ub[b] = std::max(search.ub[b], round_up(t.w));
            search.ub[c] = std::max(search.ub[c], round_up(t.w));
            search.checks[std::max({a, b, c})].push_back({t.w, a, b, c});
        }
        search.value.assign(search.m, 0);
        search.best = 0;
        for (int i = 0; i < search.m; ++i)
            search.best += search.ub[i];
        search.best += 1; // ceiling assignment is feasible; keep it reachable
        search.run(0, 0);
        result.value += search.best;
    }
    return result;
}

} // namespace pdbkit
