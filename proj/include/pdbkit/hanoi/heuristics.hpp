#ifndef PDBKIT_HANOI_HEURISTICS_HPP
#define PDBKIT_HANOI_HEURISTICS_HPP

#include <cstdint>
#include <vector>

#include "pdbkit/pdb/build.hpp"
#include "pdbkit/pdb/pattern_db.hpp"
#include "pdbkit/hanoi/hanoi.hpp"

namespace pdbkit::hanoi {

// Relaxation granting every disk its own temporary peg: each non-goal peg
// holding d disks needs 2d-1 moves; on the goal peg, every disk smaller
// than the largest disk not yet on the goal peg needs two moves.
int infinite_peg_h(State s, int n, int goal_peg = kGoalPeg);

struct InfinitePegHeuristic {
    int n;
    int goal_peg = kGoalPeg;
    int operator()(State s) const { return infinite_peg_h(s, n, goal_peg); }
};

// Exact m-disk table indexed by the packed state directly (the 2-bit-per-
// disk encoding needs no mapping scheme). Built once for the largest group;
// smaller groups pad the larger slots with the goal peg.
PatternDatabase build_hanoi_pdb(int m, PdbBuildStats* stats = nullptr);

enum class SplitMode { Static, Dynamic };

// Additive split heuristic over disjoint disk groups. Static mode fixes the
// groups (larger sizes take larger disks); dynamic mode maximizes the sum
// over every way to choose the group members (two-group splits).
class SplitHeuristic {
public:
    SplitHeuristic(const PatternDatabase& db, int n, std::vector<int> sizes, SplitMode mode,
                   int goal_peg = kGoalPeg);

    int operator()(State s) const;

    SplitMode mode() const { return mode_; }

private:
    int lookup_group(State s, const std::uint8_t* disks, int count) const;
    int static_value(State s) const;
    int dynamic_value(State s) const;

    const PatternDatabase* db_;
    int n_;
    int db_disks_;
    std::vector<int> sizes_; // descending
    SplitMode mode_;
    int goal_peg_;
    std::vector<std::vector<std::uint8_t>> static_groups_;
    std::vector<std::vector<std::uint8_t>> dynamic_choices_; // small-group combinations
};

// Number of candidate groupings the dynamic split maximizes over: pick each
// smaller group's members from the remaining disks; the final group is
// forced.
std::uint64_t count_splits(int n, std::vector<int> sizes);

} // namespace pdbkit::hanoi

#endif
