#ifndef PDBKIT_SEARCH_STATS_HPP
#define PDBKIT_SEARCH_STATS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace pdbkit {

// Limits for a single search. Exceeding a budget is a reported outcome,
// not an abort: the engine returns whatever it knows with
// budget_exhausted set and no solution cost.
struct SearchBudget {
    std::uint64_t max_generated = UINT64_MAX;
    std::uint64_t max_stored = UINT64_MAX;
};

struct SearchStats {
    std::uint64_t nodes_generated = 0;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t max_stored = 0;
    double seconds = 0.0;
    std::optional<std::int64_t> solution_cost;
    bool budget_exhausted = false;
    // Largest f = g + h among expanded nodes; meaningful when a best-first
    // search runs out of its storage budget.
    std::int64_t largest_f_expanded = -1;
    // Incremented when a heuristic had to fall back to a weaker admissible
    // bound (e.g. a conflict-graph component above the solver cap).
    std::uint64_t heuristic_fallbacks = 0;

    bool solved() const { return solution_cost.has_value(); }
};

// One result row: "instance-id, heuristic-name, cost, nodes_generated,
// nodes_expanded, max_stored, seconds".
std::string stats_csv_header();
std::string stats_csv_row(const std::string& instance_id, const std::string& heuristic,
                          const SearchStats& s);
std::string stats_json_row(const std::string& instance_id, const std::string& heuristic,
                           const SearchStats& s);

} // namespace pdbkit

#endif
