#include "pdbkit/tiles/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdbkit::tiles {

int manhattan(const Board& board, const TileState& s) {
    int sum = 0;
    for (int tile = 1; tile < board.cells(); ++tile)
        sum += board.manhattan_of(tile, s.pos[tile]);
    return sum;
}

namespace {

// Minimum number of tiles that must leave the line so the rest can pass in
// goal order: line size minus the longest strictly increasing subsequence
// of goal coordinates. Each leaver costs two extra moves.
int line_conflicts(const int* goal_coord, int count) {
    int lis = 0;
    int tails[6];
    for (int i = 0; i < count; ++i) {
        const int v = goal_coord[i];
        int lo = 0;
        while (lo < lis && tails[lo] < v)
            ++lo;
        tails[lo] = v;
        if (lo == lis)
            ++lis;
    }
    return count - lis;
}

} // namespace

int linear_conflict(const Board& board, const TileState& s) {
    int conflicts = 0;
    int coords[6];
    for (int r = 0; r < board.rows(); ++r) {
        int count = 0;
        for (int c = 0; c < board.cols(); ++c) {
            const int tile = s.cells[r * board.cols() + c];
            if (tile != 0 && tile / board.cols() == r)
                coords[count++] = tile % board.cols();
        }
        conflicts += line_conflicts(coords, count);
    }
    for (int c = 0; c < board.cols(); ++c) {
        int count = 0;
        for (int r = 0; r < board.rows(); ++r) {
            const int tile = s.cells[r * board.cols() + c];
            if (tile != 0 && tile % board.cols() == c)
                coords[count++] = tile / board.cols();
        }
        conflicts += line_conflicts(coords, count);
    }
    return manhattan(board, s) + 2 * conflicts;
}

StaticAdditiveHeuristic::StaticAdditiveHeuristic(const Board& board,
                                                 const TilePartition& partition,
                                                 std::vector<PatternDatabase> dbs,
                                                 bool use_reflection)
    : board_(&board), partition_(partition), dbs_(std::move(dbs)),
      use_reflection_(use_reflection && board.reflectable()) {
    validate_partition(board, partition_);
    if (dbs_.size() != partition_.groups.size())
        throw std::invalid_argument("StaticAdditiveHeuristic: one database per group required");
    const int L = board.cells();
    for (std::size_t g = 0; g < partition_.groups.size(); ++g) {
        const auto& tiles = partition_.groups[g];
        const PatternDatabase& db = dbs_[g];
        if (db.mapping.L != L || db.mapping.k != static_cast<int>(tiles.size()) ||
            !std::equal(tiles.begin(), tiles.end(), db.pattern.begin(), db.pattern.end()))
            throw std::invalid_argument("StaticAdditiveHeuristic: database does not match group");
        Group group{tiles, &db, {}};
        if (db.mapping.variant == MappingVariant::Sparse) {
            group.sparse_weight.resize(tiles.size());
            std::uint64_t w = 1;
            for (int i = static_cast<int>(tiles.size()) - 1; i >= 0; --i) {
                group.sparse_weight[i] = w;
                w *= static_cast<std::uint64_t>(L);
            }
        }
        groups_.push_back(std::move(group));
    }
}

int StaticAdditiveHeuristic::lookup_sum(const TileState& s) const {
    const int L = board_->cells();
    int sum = 0;
    for (const Group& group : groups_) {
        std::uint64_t index = 0;
        if (!group.sparse_weight.empty()) {
            for (std::size_t i = 0; i < group.tiles.size(); ++i)
                index += group.sparse_weight[i] * s.pos[group.tiles[i]];
        } else {
            std::uint8_t locs[8];
            for (std::size_t i = 0; i < group.tiles.size(); ++i)
                locs[i] = s.pos[group.tiles[i]];
            index = compact_rank({locs, group.tiles.size()}, L);
        }
        const std::uint8_t cost = group.db->at(index);
        if (cost == kPdbUnreached)
            throw std::logic_error("StaticAdditiveHeuristic: unreached pattern index");
        sum += cost;
    }
    return sum;
}

int StaticAdditiveHeuristic::operator()(const TileState& s) const {
    int h = lookup_sum(s);
    if (use_reflection_)
        h = std::max(h, lookup_sum(board_->reflected(s)));
    return h;
}

} // namespace pdbkit::tiles
