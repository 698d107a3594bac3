#ifndef PDBKIT_TILES_PDB_BUILD_HPP
#define PDBKIT_TILES_PDB_BUILD_HPP

#include <cstdint>
#include <vector>

#include "pdbkit/pdb/build.hpp"
#include "pdbkit/pdb/pattern_db.hpp"
#include "pdbkit/tiles/board.hpp"
#include "pdbkit/tiles/partition.hpp"

namespace pdbkit::tiles {

// Backward best-first search over (pattern tile positions, blank position).
// Under the additive policy, moves of pattern tiles cost 1 and blank slides
// through free cells cost 0. The stored table is projected over the blank,
// keeping the minimum; the search is seeded with the goal pattern paired
// with every blank cell not occupied by a pattern tile.
PatternDatabase build_tile_pdb(const Board& board, const std::vector<std::uint8_t>& tiles,
                               MappingVariant variant = MappingVariant::Sparse,
                               CostPolicy policy = CostPolicy::PatternMovesOnly,
                               PdbBuildStats* stats = nullptr);

// One database per partition group, in group order.
std::vector<PatternDatabase> build_partition_pdbs(const Board& board,
                                                  const TilePartition& partition,
                                                  MappingVariant variant = MappingVariant::Sparse,
                                                  PdbBuildStats* total = nullptr);

} // namespace pdbkit::tiles

#endif
