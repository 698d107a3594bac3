#ifndef PDBKIT_SEARCH_IDA_STAR_HPP
#define PDBKIT_SEARCH_IDA_STAR_HPP

#include <chrono>
#include <limits>
#include <vector>

#include "pdbkit/search/domain.hpp"
#include "pdbkit/search/stats.hpp"

namespace pdbkit {

namespace detail {

template <typename D, typename H>
struct IdaRun {
    const D& domain;
    H& h;
    SearchStats stats;
    std::uint64_t max_generated;
    std::int64_t found_cost = -1;
    bool out_of_budget = false;

    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

    // Returns the minimum f-value that exceeded the bound in this subtree,
    // or kInf if the subtree is exhausted. Sets found_cost on success.
    std::int64_t dfs(const typename D::State& state, std::int64_t g, std::int64_t bound,
                     int last_op) {
        std::int64_t next_bound = kInf;
        ++stats.nodes_expanded;
        const int skip_op = last_op >= 0 ? domain.inverse(last_op) : -1;
        domain.expand(state, [&](int op, const typename D::State& succ, int cost) {
            if (found_cost >= 0 || out_of_budget)
                return;
            if (op == skip_op)
                return;
            ++stats.nodes_generated;
            if (stats.nodes_generated > max_generated) {
                out_of_budget = true;
                return;
            }
            const std::int64_t g2 = g + cost;
            const std::int64_t f = g2 + h(succ);
            if (f > bound) {
                if (f < next_bound)
                    next_bound = f;
                return;
            }
            if (domain.is_goal(succ)) {
                found_cost = g2;
                return;
            }
            const std::int64_t child = dfs(succ, g2, bound, op);
            if (child < next_bound)
                next_bound = child;
        });
        return next_bound;
    }
};

} // namespace detail

// Iterative-deepening A*. The threshold starts at h(start) and each
// iteration raises it to the minimum f-value that exceeded the previous
// threshold. Expanding a successor back through the inverse of the
// operator that produced it is suppressed.
template <typename D, typename H = ZeroHeuristic>
    requires SearchDomain<D> && HeuristicFor<H, typename D::State>
SearchStats ida_star(const D& domain, const typename D::State& start, H&& h,
                     SearchBudget budget = {}, std::vector<std::int64_t>* thresholds = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    detail::IdaRun<D, H> run{domain, h, {}, budget.max_generated};
    if (domain.is_goal(start)) {
        run.stats.solution_cost = 0;
    } else {
        std::int64_t bound = h(start);
        while (true) {
            if (thresholds)
                thresholds->push_back(bound);
            const std::int64_t next = run.dfs(start, 0, bound, -1);
            if (run.found_cost >= 0) {
                run.stats.solution_cost = run.found_cost;
                break;
            }
            if (run.out_of_budget || next == detail::IdaRun<D, H>::kInf) {
                run.stats.budget_exhausted = run.out_of_budget;
                break;
            }
            bound = next;
        }
    }
    run.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return run.stats;
}

} // namespace pdbkit

#endif
