#include "pdbkit/hanoi/hanoi.hpp"

#include <random>
#include <stdexcept>

namespace pdbkit::hanoi {

State uniform_state(int n, int peg) {
    State s = 0;
    for (int d = 0; d < n; ++d)
        s |= static_cast<State>(peg) << (2 * d);
    return s;
}

std::string to_string(State s, int n) {
    std::string out;
    for (int d = n - 1; d >= 0; --d)
        out += static_cast<char>('0' + peg_of(s, d));
    return out;
}

HanoiDomain::HanoiDomain(int n, int start_peg, int goal_peg)
    : n_(n), start_peg_(start_peg), goal_peg_(goal_peg),
      goal_state_(uniform_state(n, goal_peg)) {
    if (n < 1 || n > kMaxDisks)
        throw std::invalid_argument("HanoiDomain: 1..17 disks");
    if (start_peg == goal_peg)
        throw std::invalid_argument("HanoiDomain: start equals goal peg");
}

std::vector<Move> successors(int n, State s) {
    std::vector<Move> out;
    HanoiDomain domain(n);
    domain.expand(s, [&](int op, State succ, int) {
        const int from = op >> 2;
        int disk = 0;
        while (peg_of(s, disk) != from || peg_of(succ, disk) == from)
            ++disk;
        out.push_back({disk, op & 3, succ});
    });
    return out;
}

double mean_branching_all_pegs_occupied(int n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 4)
        throw std::invalid_argument("needs at least 4 disks to occupy all pegs");
    std::mt19937_64 rng(seed);
    HanoiDomain domain(n);

    auto random_state = [&]() {
        State s = 0;
        for (int d = 0; d < n; ++d)
            s = with_peg(s, d, static_cast<int>(rng() % 4));
        return s;
    };
    auto all_occupied = [&](State s) {
        int mask = 0;
        for (int d = 0; d < n; ++d)
            mask |= 1 << peg_of(s, d);
        return mask == 0xF;
    };

    std::uint64_t counted = 0;
    double total = 0;
    State s = random_state();
    int last_disk = -1;
    std::uint64_t steps = 0;
    while (counted < samples) {
        struct Cand {
            State state;
            int disk;
        };
        Cand cands[12];
        int n_cands = 0;
        domain.expand(s, [&](int op, State succ, int) {
            const int from = op >> 2;
            int disk = 0;
            while (peg_of(s, disk) != from || peg_of(succ, disk) == from)
                ++disk;
            if (disk != last_disk)
                cands[n_cands++] = {succ, disk};
        });
        if (++steps > 64 && all_occupied(s)) {
            total += n_cands;
            ++counted;
        }
        if (n_cands == 0) {
            s = random_state();
            last_disk = -1;
            steps = 0;
            continue;
        }
        const Cand& pick = cands[rng() % n_cands];
        s = pick.state;
        last_disk = pick.disk;
    }
    return total / static_cast<double>(counted);
}

std::vector<std::uint8_t> all_distances(int n, State source) {
    const std::uint64_t space = 1ull << (2 * n);
    std::vector<std::uint8_t> dist(space, 0xFF);
    std::vector<std::uint32_t> current, next;
    HanoiDomain domain(n);
    dist[source] = 0;
    current.push_back(static_cast<std::uint32_t>(source));
    int level = 0;
    while (!current.empty()) {
        for (const std::uint32_t s : current) {
            domain.expand(s, [&](int, State succ, int) {
                if (dist[succ] == 0xFF) {
                    dist[succ] = static_cast<std::uint8_t>(level + 1);
                    next.push_back(static_cast<std::uint32_t>(succ));
                }
            });
        }
        current.swap(next);
        next.clear();
        ++level;
    }
    return dist;
}

} // namespace pdbkit::hanoi
