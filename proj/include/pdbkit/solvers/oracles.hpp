#ifndef PDBKIT_SOLVERS_ORACLES_HPP
#define PDBKIT_SOLVERS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "pdbkit/solvers/hypergraph.hpp"

namespace pdbkit {

// Brute-force reference solvers for the test suites. These enumerate the
// entire candidate space with no heuristics or bound pruning, so they stay
// independent of the branch-and-bound implementations they check. Each
// throws when the instance is too large to enumerate.

// Maximum weighted matching value by enumerating every matching.
int oracle_max_weighted_matching(const WeightedHypergraph& h);

// Minimum weighted cover value by enumerating every vertex-value vector
// (values 0..max incident weight, restricted to evens when strengthened).
int oracle_min_weighted_cover(const WeightedHypergraph& h, bool strengthened);

// Maximum cardinality matching by enumerating every matching.
int oracle_max_cardinality_matching(const std::vector<std::vector<int>>& adj);

// Minimum vertex cover size by scanning all 2^n vertex subsets (n <= 24).
int oracle_min_vertex_cover(const std::vector<std::vector<int>>& adj);

} // namespace pdbkit

#endif
