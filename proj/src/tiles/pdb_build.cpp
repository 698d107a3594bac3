#include "pdbkit/tiles/pdb_build.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pdbkit::tiles {

namespace {

// Search-space indexing: compact rank of the k pattern positions, times the
// number of free cells, plus the blank's rank among the free cells.
class TileAbstraction {
public:
    TileAbstraction(const Board& board, const std::vector<std::uint8_t>& tiles)
        : board_(board), tiles_(tiles), L_(board.cells()),
          k_(static_cast<int>(tiles.size())), nfree_(L_ - k_) {
        if (k_ > 8)
            throw std::invalid_argument("build_tile_pdb: pattern larger than 8 tiles");
        for (const std::uint8_t t : tiles_)
            if (t == 0 || t >= L_)
                throw std::invalid_argument("build_tile_pdb: bad pattern tile");
        weights_.resize(k_ + 1);
        for (int i = 0; i < k_; ++i)
            weights_[i] = falling_factorial(L_ - i - 1, k_ - i - 1);
    }

    std::uint64_t space_size() const {
        return falling_factorial(L_, k_) * static_cast<std::uint64_t>(nfree_);
    }
    std::uint64_t table_size() const { return falling_factorial(L_, k_); }
    std::uint64_t project(std::uint64_t index) const { return index / nfree_; }

    PatternDatabase skeleton() const {
        PatternDatabase db;
        db.domain = PdbDomain::Tiles;
        db.mapping = {MappingVariant::Compact, k_, L_};
        db.pattern = tiles_;
        return db;
    }

    template <typename Emit>
    void seeds(Emit&& emit) const {
        std::uint8_t pos[8];
        for (int i = 0; i < k_; ++i)
            pos[i] = tiles_[i]; // goal placement is the identity
        const std::uint64_t rank = rank_positions(pos);
        for (int slot = 0; slot < nfree_; ++slot)
            emit(rank * nfree_ + slot);
    }

    template <typename Emit>
    void expand(std::uint64_t index, Emit&& emit) const {
        std::uint8_t pos[8];
        std::uint64_t pattern_mask = 0;
        int blank = 0;
        decode(index, pos, pattern_mask, blank);
        const std::uint64_t free_mask =
            ((L_ == 64 ? ~0ull : (1ull << L_) - 1)) & ~pattern_mask;

        for (int dir = 0; dir < 4; ++dir) {
            const int c = board_.neighbor(blank, dir);
            if (c < 0)
                continue;
            const std::uint64_t cbit = 1ull << c;
            if (pattern_mask & cbit) {
                // A pattern tile slides into the blank cell.
                int i = 0;
                while (pos[i] != c)
                    ++i;
                const std::uint8_t saved = pos[i];
                pos[i] = static_cast<std::uint8_t>(blank);
                const std::uint64_t rank2 = rank_positions(pos);
                pos[i] = saved;
                const std::uint64_t free2 = (free_mask & ~(1ull << blank)) | cbit;
                const int slot2 = std::popcount(free2 & (cbit - 1));
                emit(rank2 * nfree_ + slot2, true);
            } else {
                // Blank slides through a free cell.
                const int slot2 = std::popcount(free_mask & (cbit - 1));
                emit((index / nfree_) * static_cast<std::uint64_t>(nfree_) + slot2, false);
            }
        }
    }

private:
    std::uint64_t rank_positions(const std::uint8_t* pos) const {
        std::uint64_t rank = 0;
        std::uint64_t used = 0;
        for (int i = 0; i < k_; ++i) {
            const std::uint64_t bit = 1ull << pos[i];
            const int digit = pos[i] - std::popcount(used & (bit - 1));
            rank += static_cast<std::uint64_t>(digit) * weights_[i];
            used |= bit;
        }
        return rank;
    }

    void decode(std::uint64_t index, std::uint8_t* pos, std::uint64_t& pattern_mask,
                int& blank) const {
        std::uint64_t rank = index / nfree_;
        const int slot = static_cast<int>(index % nfree_);
        std::uint8_t remaining[36];
        for (int i = 0; i < L_; ++i)
            remaining[i] = static_cast<std::uint8_t>(i);
        int n_remaining = L_;
        pattern_mask = 0;
        for (int i = 0; i < k_; ++i) {
            const int digit = static_cast<int>(rank / weights_[i]);
            rank %= weights_[i];
            pos[i] = remaining[digit];
            pattern_mask |= 1ull << pos[i];
            for (int j = digit; j + 1 < n_remaining; ++j)
                remaining[j] = remaining[j + 1];
            --n_remaining;
        }
        blank = remaining[slot];
    }

    const Board& board_;
    std::vector<std::uint8_t> tiles_;
    int L_, k_, nfree_;
    std::vector<std::uint64_t> weights_;
};

PatternDatabase to_sparse(const PatternDatabase& compact) {
    PatternDatabase out;
    out.domain = compact.domain;
    out.policy = compact.policy;
    out.pattern = compact.pattern;
    out.mapping = {MappingVariant::Sparse, compact.mapping.k, compact.mapping.L};
    out.costs.assign(out.mapping.table_size(), kPdbUnreached);
    const int L = compact.mapping.L;
    const int k = compact.mapping.k;
    for (std::uint64_t r = 0; r < compact.costs.size(); ++r) {
        const auto locs = compact_unrank(r, k, L);
        out.costs[sparse_index({locs.data(), locs.size()}, L)] = compact.costs[r];
    }
    return out;
}

} // namespace

PatternDatabase build_tile_pdb(const Board& board, const std::vector<std::uint8_t>& tiles,
                               MappingVariant variant, CostPolicy policy, PdbBuildStats* stats) {
    TileAbstraction abs(board, tiles);
    PatternDatabase db = build_additive_pdb(abs, policy, stats);
    if (variant == MappingVariant::Sparse)
        db = to_sparse(db);
    return db;
}

std::vector<PatternDatabase> build_partition_pdbs(const Board& board,
                                                  const TilePartition& partition,
                                                  MappingVariant variant, PdbBuildStats* total) {
    validate_partition(board, partition);
    std::vector<PatternDatabase> dbs;
    PdbBuildStats agg;
    for (const auto& group : partition.groups) {
        PdbBuildStats one;
        dbs.push_back(build_tile_pdb(board, group, variant, CostPolicy::PatternMovesOnly, &one));
        agg.search_states += one.search_states;
        agg.settled += one.settled;
        agg.max_cost = std::max(agg.max_cost, one.max_cost);
        agg.seconds += one.seconds;
    }
    if (total)
        *total = agg;
    return dbs;
}

} // namespace pdbkit::tiles
