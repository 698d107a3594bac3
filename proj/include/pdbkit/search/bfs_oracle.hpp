#ifndef PDBKIT_SEARCH_BFS_ORACLE_HPP
#define PDBKIT_SEARCH_BFS_ORACLE_HPP

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "pdbkit/search/domain.hpp"

namespace pdbkit {

// Exact unit-cost distances from `source` to every reachable state, keyed by
// the domain's packed representation. Test oracle for the optimality and
// admissibility suites; fails loudly instead of silently truncating when the
// reachable space exceeds the budget.
template <typename D>
    requires PackableDomain<D>
std::unordered_map<std::uint64_t, int> bfs_oracle(const D& domain, const typename D::State& source,
                                                  std::uint64_t max_states = UINT64_MAX) {
    std::unordered_map<std::uint64_t, int> dist;
    std::deque<typename D::State> queue;
    dist.emplace(domain.pack(source), 0);
    queue.push_back(source);
    while (!queue.empty()) {
        const auto state = queue.front();
        queue.pop_front();
        const int d = dist.at(domain.pack(state));
        domain.expand(state, [&](int, const typename D::State& succ, int cost) {
            if (cost != 1)
                throw std::logic_error("bfs_oracle: unit-cost domains only");
            const std::uint64_t key = domain.pack(succ);
            if (dist.emplace(key, d + 1).second) {
                if (dist.size() > max_states)
                    throw std::runtime_error("bfs_oracle: state budget exceeded");
                queue.push_back(succ);
            }
        });
    }
    return dist;
}

} // namespace pdbkit

#endif
