#ifndef PDBKIT_SEARCH_DOMAIN_HPP
#define PDBKIT_SEARCH_DOMAIN_HPP

#include <concepts>
#include <cstdint>
#include <utility>

namespace pdbkit {

// The engines are templated over a domain object with this shape:
//
//   using State = ...;                    // cheap value type
//   bool is_goal(const State&) const;
//   void expand(const State&, Emit) const;
//       // Emit is callable as emit(int op, const State& succ, int cost).
//       // Costs are nonnegative; all shipped domains are unit-cost.
//   int inverse(int op) const;            // -1 when no inverse is declared
//   std::uint64_t pack(const State&) const;  // unique key (oracle/frontier only)
//
// and over a heuristic callable h(const State&) -> int. A heuristic must be
// admissible for the optimality guarantees to hold.

template <typename D>
concept SearchDomain = requires(const D& d, const typename D::State& s) {
    typename D::State;
    { d.is_goal(s) } -> std::convertible_to<bool>;
    { d.inverse(0) } -> std::convertible_to<int>;
};

template <typename D>
concept PackableDomain = SearchDomain<D> && requires(const D& d, const typename D::State& s) {
    { d.pack(s) } -> std::convertible_to<std::uint64_t>;
};

template <typename H, typename S>
concept HeuristicFor = requires(H& h, const S& s) {
    { h(s) } -> std::convertible_to<int>;
};

// Zero heuristic, for uninformed searches.
struct ZeroHeuristic {
    template <typename S>
    int operator()(const S&) const {
        return 0;
    }
};

} // namespace pdbkit

#endif
