#ifndef PDBKIT_HANOI_SYMMETRY_HPP
#define PDBKIT_HANOI_SYMMETRY_HPP

#include <cstdint>

#include "pdbkit/hanoi/hanoi.hpp"

namespace pdbkit::hanoi {

struct HalfSearchResult {
    int optimal_length = -1;  // 2k + 1
    int half_depth = -1;      // k
    std::uint64_t max_stored = 0;
    std::uint64_t nodes_expanded = 0;
};

// Standard start to standard goal only: breadth-first frontier search from
// the start until the first state where the largest disk can move to the
// goal peg (no smaller disk on its own peg or on the goal peg). The initial
// and goal states are symmetric, so reaching depth k proves an optimal
// length of 2k + 1.
HalfSearchResult symmetric_half_search(int n, int start_peg = kStartPeg,
                                       int goal_peg = kGoalPeg,
                                       std::uint64_t max_stored = UINT64_MAX);

} // namespace pdbkit::hanoi

#endif
