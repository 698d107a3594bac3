#ifndef PDBKIT_SOLVERS_HYPERGRAPH_HPP
#define PDBKIT_SOLVERS_HYPERGRAPH_HPP

#include <cstdint>
#include <vector>

namespace pdbkit {

struct PairEdge {
    int a, b;
    int w;
};

struct TripleEdge {
    int a, b, c;
    int w;
};

// Sparse weighted hypergraph over vertex ids 0..n-1 with weighted pair
// edges and weighted three-vertex hyperedges. The exact solvers work per
// connected component (connectivity via shared vertices across both edge
// kinds).
struct WeightedHypergraph {
    int n = 0;
    std::vector<PairEdge> pairs;
    std::vector<TripleEdge> triples;

    // component_of[v] in [0, n_components); isolated vertices get their own
    // component.
    std::vector<int> components(int* n_components = nullptr) const;
};

} // namespace pdbkit

#endif
