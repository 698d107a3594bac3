#include "pdbkit/tiles/board.hpp"

#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pdbkit::tiles {

Board::Board(int rows, int cols) : rows_(rows), cols_(cols), n_cells_(rows * cols) {
    if (rows < 2 || cols < 2 || n_cells_ > kMaxCells)
        throw std::invalid_argument("Board: unsupported dimensions");
    for (int cell = 0; cell < n_cells_; ++cell) {
        const int r = cell / cols_, c = cell % cols_;
        neighbors_[cell][Up] = r > 0 ? cell - cols_ : -1;
        neighbors_[cell][Down] = r + 1 < rows_ ? cell + cols_ : -1;
        neighbors_[cell][Left] = c > 0 ? cell - 1 : -1;
        neighbors_[cell][Right] = c + 1 < cols_ ? cell + 1 : -1;
        goal_.cells[cell] = static_cast<std::uint8_t>(cell);
        goal_.pos[cell] = static_cast<std::uint8_t>(cell);
    }
    for (int tile = 1; tile < n_cells_; ++tile) {
        const int gr = tile / cols_, gc = tile % cols_;
        for (int cell = 0; cell < n_cells_; ++cell) {
            const int r = cell / cols_, c = cell % cols_;
            md_table_[tile][cell] =
                static_cast<std::uint8_t>(std::abs(r - gr) + std::abs(c - gc));
        }
    }
    if (rows_ == cols_)
        for (int cell = 0; cell < n_cells_; ++cell)
            reflect_[cell] = static_cast<std::uint8_t>((cell % cols_) * cols_ + cell / cols_);
}

TileState Board::state_from_cells(const std::vector<int>& cells_row_major) const {
    if (static_cast<int>(cells_row_major.size()) != n_cells_)
        throw std::invalid_argument("state_from_cells: wrong length");
    TileState s;
    std::array<bool, kMaxCells> seen{};
    for (int cell = 0; cell < n_cells_; ++cell) {
        const int tile = cells_row_major[cell];
        if (tile < 0 || tile >= n_cells_ || seen[tile])
            throw std::invalid_argument("state_from_cells: not a permutation");
        seen[tile] = true;
        s.cells[cell] = static_cast<std::uint8_t>(tile);
        s.pos[tile] = static_cast<std::uint8_t>(cell);
    }
    return s;
}

bool Board::is_valid(const TileState& s) const {
    std::array<bool, kMaxCells> seen{};
    for (int cell = 0; cell < n_cells_; ++cell) {
        const int tile = s.cells[cell];
        if (tile >= n_cells_ || seen[tile] || s.pos[tile] != cell)
            return false;
        seen[tile] = true;
    }
    return true;
}

bool Board::is_solvable(const TileState& s) const {
    // Every move is a transposition (sign flip) and moves the blank one grid
    // unit, so the permutation sign must match the parity of the blank's
    // taxicab distance from its goal cell.
    int inversions = 0;
    for (int i = 0; i < n_cells_; ++i)
        for (int j = i + 1; j < n_cells_; ++j)
            if (s.cells[i] > s.cells[j])
                ++inversions;
    const int blank = s.pos[0];
    const int blank_dist = blank / cols_ + blank % cols_;
    return (inversions % 2) == (blank_dist % 2);
}

TileState Board::random_solvable(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n_cells_);
    for (int i = 0; i < n_cells_; ++i)
        perm[i] = i;
    for (int i = n_cells_ - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    TileState s = state_from_cells(perm);
    if (!is_solvable(s)) {
        // Swapping two non-blank tiles flips the permutation sign and leaves
        // the blank in place.
        int a = -1, b = -1;
        for (int cell = 0; cell < n_cells_ && b < 0; ++cell) {
            if (s.cells[cell] == 0)
                continue;
            (a < 0 ? a : b) = cell;
        }
        const std::uint8_t ta = s.cells[a], tb = s.cells[b];
        s.cells[a] = tb;
        s.cells[b] = ta;
        s.pos[ta] = static_cast<std::uint8_t>(b);
        s.pos[tb] = static_cast<std::uint8_t>(a);
    }
    return s;
}

TileState Board::reflected(const TileState& s) const {
    if (!reflectable())
        throw std::logic_error("reflected: square boards only");
    TileState out;
    for (int cell = 0; cell < n_cells_; ++cell) {
        const int tile = s.cells[cell];
        const int rc = reflect_[cell];
        const int rt = tile == 0 ? 0 : reflect_[tile];
        out.cells[rc] = static_cast<std::uint8_t>(rt);
        out.pos[rt] = static_cast<std::uint8_t>(rc);
    }
    return out;
}

std::string Board::to_line(const TileState& s) const {
    std::ostringstream out;
    for (int cell = 0; cell < n_cells_; ++cell) {
        if (cell)
            out << ' ';
        out << static_cast<int>(s.cells[cell]);
    }
    return out.str();
}

TileState Board::from_line(const std::string& line) const {
    std::istringstream in(line);
    std::vector<int> cells;
    int v;
    while (in >> v)
        cells.push_back(v);
    return state_from_cells(cells);
}

std::vector<std::pair<int, TileState>> successors(const Board& board, const TileState& s) {
    std::vector<std::pair<int, TileState>> out;
    TilesDomain domain(board);
    domain.expand(s, [&](int, const TileState& succ, int) {
        out.push_back({s.cells[succ.pos[0]], succ});
    });
    return out;
}

} // namespace pdbkit::tiles
