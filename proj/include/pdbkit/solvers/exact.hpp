#ifndef PDBKIT_SOLVERS_EXACT_HPP
#define PDBKIT_SOLVERS_EXACT_HPP

#include <vector>

#include "pdbkit/solvers/hypergraph.hpp"

namespace pdbkit {

// Per-component branch-and-bound is exponential in the component size, so
// components above this cap degrade to a cheaper admissible bound instead.
constexpr int kSolverComponentCap = 12;

struct SolverResult {
    int value = 0;
    bool exact = true; // false when any component hit the cap and fell back
};

// Exact maximum-weight set of vertex-disjoint pair edges (hyperedges are
// ignored). Components above the cap contribute a greedy matching instead.
SolverResult max_weighted_matching(const WeightedHypergraph& h,
                                   std::vector<PairEdge>* chosen = nullptr);

// Minimum total of nonnegative integer vertex values such that for every
// pair edge and hyperedge the endpoint sum reaches the edge weight.
// With `strengthened` set, vertex values are restricted to even integers
// (the tile-puzzle parity argument), which in particular forces one
// endpoint of every weight-2 pair edge to at least 2. Components above the
// cap contribute their exact maximum weighted matching value, which never
// exceeds any feasible cover.
SolverResult min_weighted_cover(const WeightedHypergraph& h, bool strengthened);

} // namespace pdbkit

#endif
