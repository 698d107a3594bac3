#include "pdbkit/tiles/conflict_graph.hpp"

#include <algorithm>

#include "pdbkit/solvers/exact.hpp"
#include "pdbkit/tiles/heuristics.hpp"

namespace pdbkit::tiles {

namespace {

ConflictGraph assemble(const std::vector<std::array<int, 3>>& pair_hits,
                       const std::vector<std::array<int, 4>>& triple_hits) {
    ConflictGraph g;
    for (const auto& p : pair_hits) {
        g.tiles.push_back(p[0]);
        g.tiles.push_back(p[1]);
    }
    for (const auto& t : triple_hits) {
        g.tiles.push_back(t[0]);
        g.tiles.push_back(t[1]);
        g.tiles.push_back(t[2]);
    }
    std::sort(g.tiles.begin(), g.tiles.end());
    g.tiles.erase(std::unique(g.tiles.begin(), g.tiles.end()), g.tiles.end());
    auto local = [&](int tile) {
        return static_cast<int>(std::lower_bound(g.tiles.begin(), g.tiles.end(), tile) -
                                g.tiles.begin());
    };
    g.hyper.n = static_cast<int>(g.tiles.size());
    for (const auto& p : pair_hits)
        g.hyper.pairs.push_back({local(p[0]), local(p[1]), p[2]});
    for (const auto& t : triple_hits)
        g.hyper.triples.push_back({local(t[0]), local(t[1]), local(t[2]), t[3]});
    g.component_of = g.hyper.components(&g.n_components);
    return g;
}

} // namespace

ConflictGraph conflict_graph_of(const TileState& s, const PairsTriplesDB& db, bool use_triples) {
    std::vector<std::array<int, 3>> pair_hits;
    std::vector<std::array<int, 4>> triple_hits;
    db.for_each_active_pair(s, [&](int a, int b, int w) { pair_hits.push_back({a, b, w}); });
    if (use_triples)
        db.for_each_active_triple(
            s, [&](int a, int b, int c, int w) { triple_hits.push_back({a, b, c, w}); });
    return assemble(pair_hits, triple_hits);
}

int dynamic_h(const Board& board, const TileState& s, const PairsTriplesDB& db, DynamicMode mode,
              bool use_triples, std::uint64_t* fallbacks) {
    const int md = manhattan(board, s);
    const ConflictGraph g =
        conflict_graph_of(s, db, mode == DynamicMode::WeightedCover && use_triples);
    if (g.empty())
        return md;
    SolverResult r;
    if (mode == DynamicMode::Matching)
        r = max_weighted_matching(g.hyper);
    else
        r = min_weighted_cover(g.hyper, /*strengthened=*/true);
    if (!r.exact && fallbacks)
        ++*fallbacks;
    return md + r.value;
}

ConflictTracker::ConflictTracker(const Board& board, const PairsTriplesDB& db, bool use_triples)
    : board_(&board), db_(&db), use_triples_(use_triples && db.has_triples()) {
    const int m = board.tiles();
    pair_excess_.assign(m * (m - 1) / 2, 0);
    if (use_triples_)
        triple_excess_.assign(m * (m - 1) * (m - 2) / 6, 0);
}

void ConflictTracker::refresh_tile(int tile) {
    const int n = board_->cells();
    for (int other = 1; other < n; ++other) {
        if (other == tile)
            continue;
        const int a = std::min(tile, other), b = std::max(tile, other);
        pair_excess_[db_->pair_id(a, b)] = static_cast<std::uint8_t>(
            db_->pair_excess(a, b, state_.pos[a], state_.pos[b]));
    }
    if (!use_triples_)
        return;
    for (int x = 1; x < n; ++x) {
        if (x == tile)
            continue;
        for (int y = x + 1; y < n; ++y) {
            if (y == tile)
                continue;
            int a = tile, b = x, c = y;
            if (a > b)
                std::swap(a, b);
            if (b > c)
                std::swap(b, c);
            if (a > b)
                std::swap(a, b);
            triple_excess_[db_->triple_id(a, b, c)] = static_cast<std::uint8_t>(
                db_->triple_excess(a, b, c, state_.pos[a], state_.pos[b], state_.pos[c]));
        }
    }
}

void ConflictTracker::reset(const TileState& s) {
    state_ = s;
    std::fill(pair_excess_.begin(), pair_excess_.end(), 0);
    std::fill(triple_excess_.begin(), triple_excess_.end(), 0);
    const int n = board_->cells();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            pair_excess_[db_->pair_id(a, b)] = static_cast<std::uint8_t>(
                db_->pair_excess(a, b, s.pos[a], s.pos[b]));
    if (!use_triples_)
        return;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                triple_excess_[db_->triple_id(a, b, c)] = static_cast<std::uint8_t>(
                    db_->triple_excess(a, b, c, s.pos[a], s.pos[b], s.pos[c]));
}

void ConflictTracker::apply_move(const TileState& next, int moved_tile) {
    state_ = next;
    refresh_tile(moved_tile);
}

ConflictGraph ConflictTracker::graph() const {
    std::vector<std::array<int, 3>> pair_hits;
    std::vector<std::array<int, 4>> triple_hits;
    const int n = board_->cells();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (const int w = pair_excess_[db_->pair_id(a, b)])
                pair_hits.push_back({a, b, w});
    if (use_triples_)
        for (int a = 1; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (const int w = triple_excess_[db_->triple_id(a, b, c)])
                        triple_hits.push_back({a, b, c, w});
    return assemble(pair_hits, triple_hits);
}

} // namespace pdbkit::tiles
