#ifndef PDBKIT_PDB_MAPPING_HPP
#define PDBKIT_PDB_MAPPING_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace pdbkit {

enum class MappingVariant : std::uint8_t { Sparse = 0, Compact = 1 };

// Index scheme for a pattern of k variables over L locations. A sparse
// table has L^k cells (wasting cells with repeated locations); a compact
// table has L*(L-1)*...*(L-k+1) cells, one per partial permutation.
struct MappingScheme {
    MappingVariant variant = MappingVariant::Sparse;
    int k = 0;
    int L = 0;

    std::uint64_t table_size() const;
};

// Number of length-k partial permutations of L locations: L*(L-1)*...*(L-k+1).
std::uint64_t falling_factorial(int L, int k);

// Lexicographic rank of a partial permutation (k distinct locations out of
// [0, L)). Bijective onto [0, falling_factorial(L, k)).
std::uint64_t compact_rank(std::span<const std::uint8_t> locations, int L);

// Inverse of compact_rank.
std::vector<std::uint8_t> compact_unrank(std::uint64_t index, int k, int L);

// Row-major radix index: sum of loc[i] * L^(k-1-i). Locations need not be
// distinct; cells with repeats are simply never used by valid patterns.
std::uint64_t sparse_index(std::span<const std::uint8_t> locations, int L);

} // namespace pdbkit

#endif
