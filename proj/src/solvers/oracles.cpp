#include "pdbkit/solvers/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace pdbkit {

int oracle_max_weighted_matching(const WeightedHypergraph& h) {
    if (h.pairs.size() > 30)
        throw std::runtime_error("oracle_max_weighted_matching: too many edges");
    const std::uint32_t limit = 1u << h.pairs.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        std::uint64_t seen = 0;
        int value = 0;
        bool ok = true;
        for (std::size_t i = 0; i < h.pairs.size() && ok; ++i) {
            if (!(mask & (1u << i)))
                continue;
            const auto& e = h.pairs[i];
            const std::uint64_t bits = (1ull << e.a) | (1ull << e.b);
            if (seen & bits)
                ok = false;
            else {
                seen |= bits;
                value += e.w;
            }
        }
        if (ok && value > best)
            best = value;
    }
    return best;
}

int oracle_min_weighted_cover(const WeightedHypergraph& h, bool strengthened) {
    const int step = strengthened ? 2 : 1;
    std::vector<int> ub(h.n, 0);
    auto round_up = [&](int w) { return (w % step) ? w + step - (w % step) : w; };
    for (const auto& e : h.pairs) {
        ub[e.a] = std::max(ub[e.a], round_up(e.w));
        ub[e.b] = std::max(ub[e.b], round_up(e.w));
    }
    for (const auto& t : h.triples) {
        ub[t.a] = std::max(ub[t.a], round_up(t.w));
        ub[t.b] = std::max(ub[t.b], round_up(t.w));
        ub[t.c] = std::max(ub[t.c], round_up(t.w));
    }
    std::uint64_t combos = 1;
    for (int v = 0; v < h.n; ++v) {
        combos *= static_cast<std::uint64_t>(ub[v] / step + 1);
        if (combos > 50'000'000ull)
            throw std::runtime_error("oracle_min_weighted_cover: instance too large");
    }

    std::vector<int> value(h.n, 0);
    int best = -1;
    for (;;) {
        bool feasible = true;
        for (const auto& e : h.pairs) {
            if (value[e.a] + value[e.b] < e.w) {
                feasible = false;
                break;
            }
        }
        if (feasible) {
            for (const auto& t : h.triples) {
                if (value[t.a] + value[t.b] + value[t.c] < t.w) {
                    feasible = false;
                    break;
                }
            }
        }
        if (feasible) {
            int sum = 0;
            for (int v = 0; v < h.n; ++v)
                sum += value[v];
            if (best < 0 || sum < best)
                best = sum;
        }
        // Odometer step.
        int i = 0;
        while (i < h.n) {
            value[i] += step;
            if (value[i] <= ub[i])
                break;
            value[i] = 0;
            ++i;
        }
        if (i == h.n)
            break;
    }
    return best < 0 ? 0 : best;
}

namespace {

int matching_enum(const std::vector<std::pair<int, int>>& edges, std::size_t idx,
                  std::uint64_t seen) {
    if (idx == edges.size())
        return 0;
    int best = matching_enum(edges, idx + 1, seen);
    const std::uint64_t bits = (1ull << edges[idx].first) | (1ull << edges[idx].second);
    if (!(seen & bits))
        best = std::max(best, 1 + matching_enum(edges, idx + 1, seen | bits));
    return best;
}

} // namespace

int oracle_max_cardinality_matching(const std::vector<std::vector<int>>& adj) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        for (const int u : adj[v])
            if (v < u)
                edges.push_back({v, u});
    if (edges.size() > 28 || adj.size() > 64)
        throw std::runtime_error("oracle_max_cardinality_matching: too large");
    return matching_enum(edges, 0, 0);
}

int oracle_min_vertex_cover(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n > 24)
        throw std::runtime_error("oracle_min_vertex_cover: too many vertices");
    std::vector<std::uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (const int u : adj[v])
            nbr[v] |= 1u << u;
    const std::uint32_t limit = n == 32 ? 0 : (1u << n);
    int best = n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const int size = std::popcount(mask);
        if (size >= best)
            continue;
        bool cover = true;
        for (int v = 0; v < n && cover; ++v)
            if (!(mask & (1u << v)) && (nbr[v] & ~mask))
                cover = false;
        if (cover)
            best = size;
    }
    return best;
}

} // namespace pdbkit
