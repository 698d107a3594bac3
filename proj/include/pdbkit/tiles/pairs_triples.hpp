#ifndef PDBKIT_TILES_PAIRS_TRIPLES_HPP
#define PDBKIT_TILES_PAIRS_TRIPLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pdbkit/tiles/board.hpp"

namespace pdbkit::tiles {

// Partial tables of exact 2- and 3-tile distances, keeping only entries
// whose value exceeds what smaller groups already account for. Pair entries
// store the excess over the two Manhattan distances (positive and even);
// triple entries store the excess over the three Manhattan distances and
// strictly dominate every pair+singleton decomposition of the same tiles.
class PairsTriplesDB {
public:
    struct Entry {
        std::uint32_t key; // packed locations, base L, tile-id order
        std::uint8_t excess;
    };

    struct BuildStats {
        std::uint64_t full_pair_entries = 0;
        std::uint64_t retained_pairs = 0;
        std::uint64_t full_triple_entries = 0;
        std::uint64_t retained_triples = 0;
        double seconds = 0.0;
    };

    PairsTriplesDB() = default;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool has_triples() const { return has_triples_; }
    const BuildStats& build_stats() const { return stats_; }

    int pair_excess(int t1, int t2, int p1, int p2) const;          // 0 if absent
    int triple_excess(int t1, int t2, int t3, int p1, int p2, int p3) const;

    // All n(n-1)/2 pair searches, plus all triple searches when requested.
    static PairsTriplesDB build(const Board& board, bool with_triples);

    // Binary container: magic "APTD", version, dims, entry lists, checksum.
    void save(const std::string& path) const;
    static PairsTriplesDB load(const std::string& path);

    template <typename F>
    void for_each_active_pair(const TileState& s, F&& fn) const {
        const int n = rows_ * cols_;
        for (int a = 1; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const auto& entries = pair_entries_[pair_id(a, b)];
                if (entries.empty())
                    continue;
                const std::uint32_t key =
                    static_cast<std::uint32_t>(s.pos[a]) * n + s.pos[b];
                if (const Entry* e = find(entries, key))
                    fn(a, b, static_cast<int>(e->excess));
            }
        }
    }

    template <typename F>
    void for_each_active_triple(const TileState& s, F&& fn) const {
        if (!has_triples_)
            return;
        const int n = rows_ * cols_;
        for (int a = 1; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                for (int c = b + 1; c < n; ++c) {
                    const auto& entries = triple_entries_[triple_id(a, b, c)];
                    if (entries.empty())
                        continue;
                    const std::uint32_t key =
                        (static_cast<std::uint32_t>(s.pos[a]) * n + s.pos[b]) * n + s.pos[c];
                    if (const Entry* e = find(entries, key))
                        fn(a, b, c, static_cast<int>(e->excess));
                }
            }
        }
    }

    int pair_id(int t1, int t2) const;           // t1 < t2, both >= 1
    int triple_id(int t1, int t2, int t3) const; // t1 < t2 < t3

    const std::vector<Entry>& pair_bucket(int id) const { return pair_entries_[id]; }
    const std::vector<Entry>& triple_bucket(int id) const { return triple_entries_[id]; }

private:
    static const Entry* find(const std::vector<Entry>& entries, std::uint32_t key);

    int rows_ = 0, cols_ = 0;
    bool has_triples_ = false;
    std::vector<std::vector<Entry>> pair_entries_;
    std::vector<std::vector<Entry>> triple_entries_;
    BuildStats stats_;
};

} // namespace pdbkit::tiles

#endif
