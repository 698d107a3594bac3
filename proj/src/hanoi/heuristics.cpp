#include "pdbkit/hanoi/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pdbkit::hanoi {

int infinite_peg_h(State s, int n, int goal_peg) {
    int count[4] = {0, 0, 0, 0};
    int largest_off_goal = -1;
    for (int d = 0; d < n; ++d) {
        const int p = peg_of(s, d);
        ++count[p];
        if (p != goal_peg)
            largest_off_goal = d;
    }
    int h = 0;
    for (int p = 0; p < 4; ++p)
        if (p != goal_peg && count[p] > 0)
            h += 2 * count[p] - 1;
    for (int d = 0; d < largest_off_goal; ++d)
        if (peg_of(s, d) == goal_peg)
            h += 2;
    return h;
}

namespace {

// Abstraction for the backward build: the m-disk problem itself, every move
// being a pattern move.
struct HanoiAbstraction {
    int m;
    HanoiDomain domain;

    explicit HanoiAbstraction(int disks) : m(disks), domain(disks) {}

    std::uint64_t space_size() const { return 1ull << (2 * m); }
    std::uint64_t table_size() const { return space_size(); }
    std::uint64_t project(std::uint64_t index) const { return index; }

    PatternDatabase skeleton() const {
        PatternDatabase db;
        db.domain = PdbDomain::Hanoi;
        db.mapping = {MappingVariant::Sparse, m, 4};
        return db;
    }

    template <typename Emit>
    void seeds(Emit&& emit) const {
        emit(uniform_state(m, kGoalPeg));
    }

    template <typename Emit>
    void expand(std::uint64_t index, Emit&& emit) const {
        domain.expand(index, [&](int, State succ, int) { emit(succ, true); });
    }
};

} // namespace

PatternDatabase build_hanoi_pdb(int m, PdbBuildStats* stats) {
    if (m < 1 || m > 16)
        throw std::invalid_argument("build_hanoi_pdb: 1..16 disks");
    HanoiAbstraction abs(m);
    return build_additive_pdb(abs, CostPolicy::PatternMovesOnly, stats);
}

SplitHeuristic::SplitHeuristic(const PatternDatabase& db, int n, std::vector<int> sizes,
                               SplitMode mode, int goal_peg)
    : db_(&db), n_(n), db_disks_(db.mapping.k), sizes_(std::move(sizes)), mode_(mode),
      goal_peg_(goal_peg) {
    if (db.domain != PdbDomain::Hanoi)
        throw std::invalid_argument("SplitHeuristic: hanoi database required");
    std::sort(sizes_.begin(), sizes_.end(), std::greater<int>());
    const int total = std::accumulate(sizes_.begin(), sizes_.end(), 0);
    if (total != n)
        throw std::invalid_argument("SplitHeuristic: group sizes must sum to n");
    if (sizes_.empty() || sizes_.front() > db_disks_)
        throw std::invalid_argument("SplitHeuristic: group larger than database");

    // Static assignment: the largest group takes the largest disks, and so
    // on downward.
    int next_disk = n_ - 1;
    for (const int size : sizes_) {
        std::vector<std::uint8_t> group(size);
        for (int i = size - 1; i >= 0; --i)
            group[i] = static_cast<std::uint8_t>(next_disk--);
        std::sort(group.begin(), group.end());
        static_groups_.push_back(std::move(group));
    }

    if (mode_ == SplitMode::Dynamic) {
        if (sizes_.size() != 2)
            throw std::invalid_argument("SplitHeuristic: dynamic mode is two-group");
        // All combinations of the small group's members, lexicographic.
        const int small = sizes_[1];
        std::vector<std::uint8_t> combo(small);
        for (int i = 0; i < small; ++i)
            combo[i] = static_cast<std::uint8_t>(i);
        for (;;) {
            dynamic_choices_.push_back(combo);
            int i = small - 1;
            while (i >= 0 && combo[i] == n_ - small + i)
                --i;
            if (i < 0)
                break;
            ++combo[i];
            for (int j = i + 1; j < small; ++j)
                combo[j] = combo[j - 1] + 1;
        }
    }
}

int SplitHeuristic::lookup_group(State s, const std::uint8_t* disks, int count) const {
    // Group disks map onto db slots in size order; unused larger slots sit
    // on the goal peg. The database is built for goal peg 3, so other goal
    // pegs are handled by swapping peg labels.
    std::uint64_t index = 0;
    for (int i = 0; i < count; ++i) {
        int p = peg_of(s, disks[i]);
        if (goal_peg_ != kGoalPeg) {
            if (p == goal_peg_)
                p = kGoalPeg;
            else if (p == kGoalPeg)
                p = goal_peg_;
        }
        index |= static_cast<std::uint64_t>(p) << (2 * i);
    }
    for (int i = count; i < db_disks_; ++i)
        index |= 3ull << (2 * i);
    return db_->at(index);
}

int SplitHeuristic::static_value(State s) const {
    int h = 0;
    for (const auto& group : static_groups_)
        h += lookup_group(s, group.data(), static_cast<int>(group.size()));
    return h;
}

int SplitHeuristic::dynamic_value(State s) const {
    const int small = sizes_[1];
    const int big = sizes_[0];
    // When the whole problem fits the database, its exact value bounds every
    // split sum, so the enumeration can stop once it is reached.
    int ceiling = -1;
    if (n_ <= db_disks_) {
        std::uint8_t all[kMaxDisks];
        for (int d = 0; d < n_; ++d)
            all[d] = static_cast<std::uint8_t>(d);
        ceiling = lookup_group(s, all, n_);
    }
    int best = 0;
    std::uint8_t complement[kMaxDisks];
    for (const auto& combo : dynamic_choices_) {
        int c = 0;
        std::size_t j = 0;
        for (int d = 0; d < n_; ++d) {
            if (j < combo.size() && combo[j] == d)
                ++j;
            else
                complement[c++] = static_cast<std::uint8_t>(d);
        }
        const int value = lookup_group(s, combo.data(), small) + lookup_group(s, complement, big);
        if (value > best) {
            best = value;
            if (best == ceiling)
                break;
        }
    }
    return best;
}

int SplitHeuristic::operator()(State s) const {
    return mode_ == SplitMode::Static ? static_value(s) : dynamic_value(s);
}

std::uint64_t count_splits(int n, std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total != n)
        throw std::invalid_argument("count_splits: sizes must sum to n");
    auto choose = [](int nn, int kk) {
        std::uint64_t r = 1;
        for (int i = 1; i <= kk; ++i)
            r = r * static_cast<std::uint64_t>(nn - kk + i) / i;
        return r;
    };
    std::uint64_t count = 1;
    int remaining = n;
    // The largest group is forced once the others are chosen.
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        count *= choose(remaining, sizes[i]);
        remaining -= sizes[i];
    }
    return count;
}

} // namespace pdbkit::hanoi
