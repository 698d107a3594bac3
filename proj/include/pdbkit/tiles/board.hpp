#ifndef PDBKIT_TILES_BOARD_HPP
#define PDBKIT_TILES_BOARD_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pdbkit::tiles {

constexpr int kMaxCells = 36;

// Blank movement directions; the operator id of a move is the direction the
// blank travels, so the inverse operator is the opposite direction.
enum Dir : int { Up = 0, Down = 1, Left = 2, Right = 3 };
constexpr int kInverseDir[4] = {Down, Up, Right, Left};

// A puzzle position. cells[] maps cell -> tile (0 is the blank), pos[] maps
// tile -> cell. Entries past rows*cols stay zero so whole-array equality is
// safe.
struct TileState {
    std::array<std::uint8_t, kMaxCells> cells{};
    std::array<std::uint8_t, kMaxCells> pos{};

    bool operator==(const TileState&) const = default;
};

// Static description of an R x C sliding-tile board with the goal state
// "blank in the top-left corner, tile i on cell i".
class Board {
public:
    Board(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int cells() const { return n_cells_; }
    int tiles() const { return n_cells_ - 1; }

    const TileState& goal() const { return goal_; }

    // neighbor(cell, dir) is the adjacent cell or -1.
    int neighbor(int cell, int dir) const { return neighbors_[cell][dir]; }

    int manhattan_of(int tile, int cell) const { return md_table_[tile][cell]; }

    // Reflection about the main diagonal (square boards only). Cell and tile
    // maps coincide because the goal placement is the identity.
    int reflect_cell(int cell) const { return reflect_[cell]; }
    bool reflectable() const { return rows_ == cols_; }

    TileState state_from_cells(const std::vector<int>& cells_row_major) const;
    bool is_valid(const TileState& s) const;
    bool is_solvable(const TileState& s) const;

    // Uniform random permutation with the parity repaired by swapping two
    // non-blank tiles when it lands in the unsolvable half. Deterministic
    // per seed.
    TileState random_solvable(std::uint64_t seed) const;

    TileState reflected(const TileState& s) const;

    std::string to_line(const TileState& s) const;
    TileState from_line(const std::string& line) const;

private:
    int rows_, cols_, n_cells_;
    TileState goal_;
    std::array<std::array<int, 4>, kMaxCells> neighbors_{};
    std::array<std::array<std::uint8_t, kMaxCells>, kMaxCells> md_table_{};
    std::array<std::uint8_t, kMaxCells> reflect_{};
};

// Search-domain adapter for the generic engines. Unit-cost moves; operator
// ids are blank directions; pack() needs rows*cols <= 16 (4 bits per cell).
class TilesDomain {
public:
    using State = TileState;

    explicit TilesDomain(const Board& board) : board_(&board) {}

    const Board& board() const { return *board_; }

    bool is_goal(const State& s) const { return s == board_->goal(); }
    int inverse(int op) const { return kInverseDir[op]; }

    template <typename F>
    void expand(const State& s, F&& emit) const {
        const int blank = s.pos[0];
        for (int dir = 0; dir < 4; ++dir) {
            const int c = board_->neighbor(blank, dir);
            if (c < 0)
                continue;
            State succ = s;
            const std::uint8_t tile = s.cells[c];
            succ.cells[blank] = tile;
            succ.cells[c] = 0;
            succ.pos[tile] = static_cast<std::uint8_t>(blank);
            succ.pos[0] = static_cast<std::uint8_t>(c);
            emit(dir, succ, 1);
        }
    }

    std::uint64_t pack(const State& s) const {
        std::uint64_t key = 0;
        for (int i = board_->cells() - 1; i >= 0; --i)
            key = (key << 4) | s.cells[i];
        return key;
    }

private:
    const Board* board_;
};

// Successor list as (moved tile, state) pairs.
std::vector<std::pair<int, TileState>> successors(const Board& board, const TileState& s);

} // namespace pdbkit::tiles

#endif
