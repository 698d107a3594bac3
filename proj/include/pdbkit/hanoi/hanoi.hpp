#ifndef PDBKIT_HANOI_HANOI_HPP
#define PDBKIT_HANOI_HANOI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pdbkit::hanoi {

// A state packs the peg (0..3) of disk i into bits 2i..2i+1; disk 0 is the
// smallest. Every bit pattern of 2n bits is a legal state.
using State = std::uint64_t;

constexpr int kMaxDisks = 17;
constexpr int kStartPeg = 0;
constexpr int kGoalPeg = 3;

inline int peg_of(State s, int disk) { return static_cast<int>((s >> (2 * disk)) & 3); }
inline State with_peg(State s, int disk, int peg) {
    const int shift = 2 * disk;
    return (s & ~(3ull << shift)) | (static_cast<State>(peg) << shift);
}
State uniform_state(int n, int peg);

// Digits largest disk first, e.g. "000" for three disks on peg 0.
std::string to_string(State s, int n);

// Search-domain adapter. Operator id is from_peg * 4 + to_peg; the inverse
// swaps the pegs. Disk d moves from p to q iff no smaller disk sits on p or
// q, giving 3..6 successors.
class HanoiDomain {
public:
    using State = hanoi::State;

    explicit HanoiDomain(int n, int start_peg = kStartPeg, int goal_peg = kGoalPeg);

    int disks() const { return n_; }
    int goal_peg() const { return goal_peg_; }
    State initial() const { return uniform_state(n_, start_peg_); }
    State goal() const { return goal_state_; }

    bool is_goal(State s) const { return s == goal_state_; }
    int inverse(int op) const { return (op & 3) * 4 + (op >> 2); }
    std::uint64_t pack(State s) const { return s; }

    template <typename F>
    void expand(State s, F&& emit) const {
        int top[4] = {n_, n_, n_, n_}; // smallest disk per peg
        int found = 0;
        for (int d = 0; d < n_ && found < 4; ++d) {
            const int p = peg_of(s, d);
            if (top[p] == n_) {
                top[p] = d;
                ++found;
            }
        }
        for (int p = 0; p < 4; ++p) {
            const int d = top[p];
            if (d == n_)
                continue;
            for (int q = 0; q < 4; ++q) {
                if (q == p || top[q] < d)
                    continue;
                emit(p * 4 + q, with_peg(s, d, q), 1);
            }
        }
    }

private:
    int n_, start_peg_, goal_peg_;
    State goal_state_;
};

// Successor list as (disk, destination peg, state).
struct Move {
    int disk;
    int to_peg;
    State state;
};
std::vector<Move> successors(int n, State s);

// Mean number of legal moves, excluding every move of the disk moved last,
// over random-walk states where all four pegs are occupied.
double mean_branching_all_pegs_occupied(int n, std::uint64_t samples, std::uint64_t seed);

// Exact distances from `source` over all 4^n states (flat-array BFS).
std::vector<std::uint8_t> all_distances(int n, State source);

} // namespace pdbkit::hanoi

#endif
