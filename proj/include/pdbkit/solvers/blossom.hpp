#ifndef PDBKIT_SOLVERS_BLOSSOM_HPP
#define PDBKIT_SOLVERS_BLOSSOM_HPP

#include <vector>

namespace pdbkit {

// Size of a maximum cardinality matching in a general graph, via augmenting
// paths with blossom contraction. Adjacency is given as neighbor lists over
// vertices 0..n-1.
int max_cardinality_matching(const std::vector<std::vector<int>>& adj);

} // namespace pdbkit

#endif
