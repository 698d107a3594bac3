#ifndef PDBKIT_SEARCH_DFBNB_HPP
#define PDBKIT_SEARCH_DFBNB_HPP

#include <chrono>
#include <limits>
#include <optional>

#include "pdbkit/search/domain.hpp"
#include "pdbkit/search/stats.hpp"

namespace pdbkit {

// Depth-first branch-and-bound over a finite, duplicate-free search tree.
// Returns the minimum cost over goal leaves; any node with
// f(n) = g(n) + h(n) >= incumbent is pruned. An initial bound acts as a
// pre-seeded incumbent (exclusive).
template <typename D, typename H = ZeroHeuristic>
    requires SearchDomain<D> && HeuristicFor<H, typename D::State>
SearchStats dfbnb(const D& domain, const typename D::State& start, H&& h,
                  std::optional<std::int64_t> initial_bound = std::nullopt,
                  SearchBudget budget = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchStats stats;
    std::int64_t incumbent =
        initial_bound ? *initial_bound : std::numeric_limits<std::int64_t>::max();
    bool found = false;
    bool out_of_budget = false;

    auto visit = [&](auto&& self, const typename D::State& state, std::int64_t g) -> void {
        if (out_of_budget)
            return;
        if (g + h(state) >= incumbent)
            return;
        if (domain.is_goal(state)) {
            incumbent = g;
            found = true;
            return;
        }
        ++stats.nodes_expanded;
        domain.expand(state, [&](int, const typename D::State& succ, int cost) {
            if (out_of_budget)
                return;
            ++stats.nodes_generated;
            if (stats.nodes_generated > budget.max_generated) {
                out_of_budget = true;
                return;
            }
            self(self, succ, g + cost);
        });
    };
    visit(visit, start, 0);

    if (found)
        stats.solution_cost = incumbent;
    stats.budget_exhausted = out_of_budget;
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

} // namespace pdbkit

#endif
