#ifndef PDBKIT_PDB_BUILD_HPP
#define PDBKIT_PDB_BUILD_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pdbkit/pdb/pattern_db.hpp"

namespace pdbkit {

struct PdbBuildStats {
    std::uint64_t search_states = 0;
    std::uint64_t settled = 0;
    int max_cost = 0;
    double seconds = 0.0;
};

// Abstraction contract for the backward build:
//
//   std::uint64_t space_size() const;    // dense index range of search states
//   std::uint64_t table_size() const;    // projected (stored) index range
//   PatternDatabase skeleton() const;    // descriptor with empty costs
//   void seeds(Emit) const;              // emit(std::uint64_t index), cost-0 sources
//   void expand(std::uint64_t, Emit2) const; // emit(std::uint64_t succ, bool pattern_move)
//   std::uint64_t project(std::uint64_t) const;
//
// Under the additive policy only pattern moves cost 1 and everything else
// costs 0, so the frontier is processed as a 0-1 (two-queue) search rather
// than plain BFS; the projected table keeps the first (minimum) settlement
// per stored index.
template <typename A>
PatternDatabase build_additive_pdb(const A& abs, CostPolicy policy = CostPolicy::PatternMovesOnly,
                                   PdbBuildStats* build_stats = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t space = abs.space_size();
    if (space > UINT32_MAX)
        throw std::runtime_error("build_additive_pdb: search space exceeds 2^32 states");

    std::vector<std::uint8_t> dist(space, kPdbUnreached);
    // current holds states of the cost level being closed (0-cost closure is
    // LIFO within the level); next holds the (cost+1) frontier.
    std::vector<std::uint32_t> current, next;

    abs.seeds([&](std::uint64_t seed) {
        if (dist[seed] != 0) {
            dist[seed] = 0;
            current.push_back(static_cast<std::uint32_t>(seed));
        }
    });

    int cost = 0;
    std::uint64_t settled = 0;
    while (!current.empty()) {
        while (!current.empty()) {
            const std::uint32_t s = current.back();
            current.pop_back();
            if (dist[s] != cost)
                continue; // superseded entry
            ++settled;
            abs.expand(s, [&](std::uint64_t succ, bool pattern_move) {
                const int move_cost =
                    (policy == CostPolicy::PatternMovesOnly && !pattern_move) ? 0 : 1;
                const int d2 = cost + move_cost;
                if (d2 < dist[succ]) {
                    if (d2 > 254)
                        throw std::runtime_error("build_additive_pdb: cost exceeds 254");
                    dist[succ] = static_cast<std::uint8_t>(d2);
                    if (move_cost == 0)
                        current.push_back(static_cast<std::uint32_t>(succ));
                    else
                        next.push_back(static_cast<std::uint32_t>(succ));
                }
            });
        }
        current.swap(next);
        // Entries in `current` may have been improved to this level already;
        // the dist check above drops the stale ones.
        ++cost;
    }

    PatternDatabase db = abs.skeleton();
    db.policy = policy;
    db.costs.assign(abs.table_size(), kPdbUnreached);
    int max_cost = 0;
    for (std::uint64_t i = 0; i < space; ++i) {
        const std::uint8_t d = dist[i];
        if (d == kPdbUnreached)
            continue;
        std::uint8_t& cell = db.costs[abs.project(i)];
        if (d < cell)
            cell = d;
        if (d > max_cost)
            max_cost = d;
    }

    if (build_stats) {
        build_stats->search_states = space;
        build_stats->settled = settled;
        build_stats->max_cost = max_cost;
        build_stats->seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return db;
}

} // namespace pdbkit

#endif
