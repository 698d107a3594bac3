#ifndef PDBKIT_SEARCH_FRONTIER_ASTAR_HPP
#define PDBKIT_SEARCH_FRONTIER_ASTAR_HPP

#include <chrono>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pdbkit/search/domain.hpp"
#include "pdbkit/search/stats.hpp"

namespace pdbkit {

// Best-first search that keeps only the Open list. Each stored node carries
// a used-operator bitmask: when a node is expanded (and deleted), the
// inverse operator is marked in every neighbor so that the expansion
// frontier never regenerates interior states. Ties on f are broken in
// favor of smaller h via two-level (f, then h) buckets, so selection is
// constant-time amortized. Operator ids must be < 32 and every operator
// needs a declared inverse. The solution path is not reconstructed.
//
// Requires a consistent heuristic: a node is expanded at most once.
template <typename D, typename H = ZeroHeuristic>
    requires PackableDomain<D> && HeuristicFor<H, typename D::State>
SearchStats frontier_a_star(const D& domain, const typename D::State& start, H&& h,
                            SearchBudget budget = {}) {
    using State = typename D::State;
    const auto t0 = std::chrono::steady_clock::now();
    SearchStats stats;

    struct Node {
        State state;
        std::int32_t g;
        std::int32_t h;
        std::uint32_t used_ops;
        std::uint32_t gen; // bumped on reuse so stale bucket entries die
    };
    struct Entry {
        std::uint32_t slot;
        std::uint32_t gen;
    };

    std::vector<Node> nodes;
    std::vector<std::uint32_t> free_slots;
    std::unordered_map<std::uint64_t, std::uint32_t> index; // pack -> slot
    std::vector<std::vector<std::vector<Entry>>> open;      // open[f][h] -> entries
    std::uint64_t stored = 0;
    std::size_t f_cursor = 0;
    std::vector<std::size_t> h_cursor;

    auto bucket_push = [&](std::int32_t f, std::int32_t hv, Entry e) {
        const auto fu = static_cast<std::size_t>(f);
        const auto hu = static_cast<std::size_t>(hv);
        if (fu >= open.size()) {
            open.resize(fu + 1);
            h_cursor.resize(fu + 1, 0);
        }
        if (hu >= open[fu].size())
            open[fu].resize(hu + 1);
        open[fu][hu].push_back(e);
        if (fu < f_cursor)
            f_cursor = fu;
        if (hu < h_cursor[fu])
            h_cursor[fu] = hu;
    };

    auto alloc = [&](const State& s, std::int32_t g, std::int32_t hv) -> std::uint32_t {
        std::uint32_t slot;
        if (!free_slots.empty()) {
            slot = free_slots.back();
            free_slots.pop_back();
            const std::uint32_t gen = nodes[slot].gen + 1;
            nodes[slot] = Node{s, g, hv, 0, gen};
        } else {
            slot = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back(Node{s, g, hv, 0, 0});
        }
        ++stored;
        if (stored > stats.max_stored)
            stats.max_stored = stored;
        return slot;
    };

    {
        const std::int32_t h0 = h(start);
        const std::uint32_t slot = alloc(start, 0, h0);
        index.emplace(domain.pack(start), slot);
        bucket_push(h0, h0, {slot, nodes[slot].gen});
    }

    while (true) {
        // Advance to the lowest live (f, h) entry.
        std::uint32_t slot = UINT32_MAX;
        while (f_cursor < open.size()) {
            auto& levels = open[f_cursor];
            std::size_t& hc = h_cursor[f_cursor];
            while (hc < levels.size()) {
                auto& es = levels[hc];
                while (!es.empty()) {
                    const Entry e = es.back();
                    es.pop_back();
                    const Node& n = nodes[e.slot];
                    if (n.gen == e.gen &&
                        n.g + n.h == static_cast<std::int32_t>(f_cursor) &&
                        n.h == static_cast<std::int32_t>(hc)) {
                        slot = e.slot;
                        break;
                    }
                }
                if (slot != UINT32_MAX)
                    break;
                ++hc;
            }
            if (slot != UINT32_MAX)
                break;
            ++f_cursor;
        }
        if (slot == UINT32_MAX)
            break; // open list exhausted, no solution

        const Node node = nodes[slot];
        if (domain.is_goal(node.state)) {
            stats.solution_cost = node.g;
            break;
        }
        stats.largest_f_expanded = node.g + node.h;
        ++stats.nodes_expanded;

        // Close and delete: frontier search never stores interior nodes.
        index.erase(domain.pack(node.state));
        nodes[slot].gen++;
        free_slots.push_back(slot);
        --stored;

        bool out_of_budget = false;
        domain.expand(node.state, [&](int op, const State& succ, int cost) {
            if (out_of_budget)
                return;
            if (node.used_ops & (1u << op))
                return; // leads to a closed node
            ++stats.nodes_generated;
            const int inv = domain.inverse(op);
            const std::int32_t g2 = node.g + cost;
            const std::uint64_t key = domain.pack(succ);
            auto it = index.find(key);
            if (it != index.end()) {
                Node& other = nodes[it->second];
                other.used_ops |= 1u << inv;
                if (g2 < other.g) {
                    other.g = g2;
                    bucket_push(g2 + other.h, other.h, {it->second, other.gen});
                }
                return;
            }
            if (stored >= budget.max_stored || stats.nodes_generated > budget.max_generated) {
                out_of_budget = true;
                return;
            }
            const std::int32_t h2 = h(succ);
            const std::uint32_t fresh = alloc(succ, g2, h2);
            nodes[fresh].used_ops = 1u << inv;
            index.emplace(key, fresh);
            bucket_push(g2 + h2, h2, {fresh, nodes[fresh].gen});
        });
        if (out_of_budget) {
            stats.budget_exhausted = true;
            break;
        }
    }

    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

} // namespace pdbkit

#endif
