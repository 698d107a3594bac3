#ifndef PDBKIT_TILES_CONFLICT_GRAPH_HPP
#define PDBKIT_TILES_CONFLICT_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "pdbkit/solvers/hypergraph.hpp"
#include "pdbkit/tiles/board.hpp"
#include "pdbkit/tiles/pairs_triples.hpp"

namespace pdbkit::tiles {

// Excess-over-Manhattan graph for one state: a vertex per tile involved in
// at least one active stored entry, pair edges and triple hyperedges
// weighted by the excess.
struct ConflictGraph {
    std::vector<int> tiles;   // global tile ids, sorted; vertex i is tiles[i]
    WeightedHypergraph hyper; // local vertex ids
    std::vector<int> component_of;
    int n_components = 0;

    bool empty() const { return hyper.pairs.empty() && hyper.triples.empty(); }
};

ConflictGraph conflict_graph_of(const TileState& s, const PairsTriplesDB& db,
                                bool use_triples = true);

enum class DynamicMode { Matching, WeightedCover };

// Manhattan plus the conflict-graph bound: a maximum weighted matching of
// the pair edges, or a minimum weighted vertex cover of the full hypergraph
// under the parity-strengthened constraints. Components above the solver
// cap degrade to the greedy bound and bump *fallbacks.
int dynamic_h(const Board& board, const TileState& s, const PairsTriplesDB& db, DynamicMode mode,
              bool use_triples = true, std::uint64_t* fallbacks = nullptr);

struct DynamicHeuristic {
    const Board* board;
    const PairsTriplesDB* db;
    DynamicMode mode = DynamicMode::WeightedCover;
    bool use_triples = true;
    mutable std::uint64_t fallbacks = 0;

    int operator()(const TileState& s) const {
        return dynamic_h(*board, s, *db, mode, use_triples, &fallbacks);
    }
};

// Incremental conflict-graph maintenance: tracks the active entries and
// refreshes only those involving the moved tile. Contract: graph() equals
// conflict_graph_of() on the same state.
class ConflictTracker {
public:
    ConflictTracker(const Board& board, const PairsTriplesDB& db, bool use_triples = true);

    void reset(const TileState& s);
    void apply_move(const TileState& next, int moved_tile);

    const TileState& state() const { return state_; }
    ConflictGraph graph() const;

private:
    void refresh_tile(int tile);

    const Board* board_;
    const PairsTriplesDB* db_;
    bool use_triples_;
    TileState state_;
    std::vector<std::uint8_t> pair_excess_;   // by pair id; 0 = inactive
    std::vector<std::uint8_t> triple_excess_; // by triple id
};

} // namespace pdbkit::tiles

#endif
