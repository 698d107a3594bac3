#ifndef PDBKIT_TILES_HEURISTICS_HPP
#define PDBKIT_TILES_HEURISTICS_HPP

#include <cstdint>
#include <vector>

#include "pdbkit/pdb/pattern_db.hpp"
#include "pdbkit/tiles/board.hpp"
#include "pdbkit/tiles/partition.hpp"

namespace pdbkit::tiles {

int manhattan(const Board& board, const TileState& s);

// Manhattan plus two moves for every resolved conflict between tiles that
// sit in their goal row or column in reversed order.
int linear_conflict(const Board& board, const TileState& s);

struct ManhattanHeuristic {
    const Board* board;
    int operator()(const TileState& s) const { return manhattan(*board, s); }
};

struct LinearConflictHeuristic {
    const Board* board;
    int operator()(const TileState& s) const { return linear_conflict(*board, s); }
};

// Sum of additive pattern-database lookups over the groups of a fixed
// partition, maximized with the same lookups applied to the diagonally
// reflected state (square boards). The reflected pass reuses the same
// tables.
class StaticAdditiveHeuristic {
public:
    StaticAdditiveHeuristic(const Board& board, const TilePartition& partition,
                            std::vector<PatternDatabase> dbs, bool use_reflection = true);

    int operator()(const TileState& s) const;

    const TilePartition& partition() const { return partition_; }

private:
    struct Group {
        std::vector<std::uint8_t> tiles;
        const PatternDatabase* db;
        std::vector<std::uint64_t> sparse_weight; // L^(k-1-i) for sparse lookups
    };

    int lookup_sum(const TileState& s) const;

    const Board* board_;
    TilePartition partition_;
    std::vector<PatternDatabase> dbs_;
    std::vector<Group> groups_;
    bool use_reflection_;
};

} // namespace pdbkit::tiles

#endif
