#ifndef PDBKIT_TILES_PARTITION_HPP
#define PDBKIT_TILES_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pdbkit::tiles {

class Board;

// Disjoint tile groups covering all tiles; the blank belongs to no group.
struct TilePartition {
    std::vector<std::vector<std::uint8_t>> groups;

    std::string name; // e.g. "5-5-5"; informational
};

// Throws unless the groups are pairwise disjoint and cover tiles 1..n-1.
void validate_partition(const Board& board, const TilePartition& partition);

// Fixture format: one line per group listing tile numbers; '#' starts a
// comment.
TilePartition parse_partition(const std::string& text);
TilePartition load_partition_file(const std::string& path);
std::string partition_to_text(const TilePartition& partition);

// Built-in 4x4 layouts ("5-5-5", "6-6-3", "7-8") plus "singletons" (one
// group per tile, reproducing Manhattan) for any board.
TilePartition builtin_partition(const Board& board, const std::string& layout_name);

} // namespace pdbkit::tiles

#endif
