#include "pdbkit/solvers/hypergraph.hpp"

#include <numeric>

namespace pdbkit {

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b)
        parent[b] = a;
}

} // namespace

std::vector<int> WeightedHypergraph::components(int* n_components) const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : pairs)
        unite(parent, e.a, e.b);
    for (const auto& t : triples) {
        unite(parent, t.a, t.b);
        unite(parent, t.a, t.c);
    }
    std::vector<int> id(n, -1);
    int count = 0;
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) {
        const int root = find_root(parent, v);
        if (id[root] < 0)
            id[root] = count++;
        out[v] = id[root];
    }
    if (n_components)
        *n_components = count;
    return out;
}

} // namespace pdbkit
