#include "pdbkit/pdb/mapping.hpp"

#include <stdexcept>

namespace pdbkit {

std::uint64_t falling_factorial(int L, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r *= static_cast<std::uint64_t>(L - i);
    return r;
}

std::uint64_t MappingScheme::table_size() const {
    if (variant == MappingVariant::Compact)
        return falling_factorial(L, k);
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r *= static_cast<std::uint64_t>(L);
    return r;
}

std::uint64_t compact_rank(std::span<const std::uint8_t> locations, int L) {
    const int k = static_cast<int>(locations.size());
    // remaining[i] holds the still-unused locations in increasing order.
    std::vector<std::uint8_t> remaining(L);
    for (int i = 0; i < L; ++i)
        remaining[i] = static_cast<std::uint8_t>(i);
    int n_remaining = L;

    std::uint64_t rank = 0;
    for (int i = 0; i < k; ++i) {
        const std::uint8_t loc = locations[i];
        if (loc >= L)
            throw std::out_of_range("compact_rank: location out of range");
        int pos = -1;
        for (int j = 0; j < n_remaining; ++j) {
            if (remaining[j] == loc) {
                pos = j;
                break;
            }
        }
        if (pos < 0)
            throw std::invalid_argument("compact_rank: duplicate location");
        // Mixed-radix digit: position among the unused locations, weighted
        // by the number of completions of the remaining slots.
        rank += static_cast<std::uint64_t>(pos) * falling_factorial(L - i - 1, k - i - 1);
        for (int j = pos; j + 1 < n_remaining; ++j)
            remaining[j] = remaining[j + 1];
        --n_remaining;
    }
    return rank;
}

std::vector<std::uint8_t> compact_unrank(std::uint64_t index, int k, int L) {
    if (index >= falling_factorial(L, k))
        throw std::out_of_range("compact_unrank: index out of range");
    std::vector<std::uint8_t> remaining(L);
    for (int i = 0; i < L; ++i)
        remaining[i] = static_cast<std::uint8_t>(i);
    int n_remaining = L;

    std::vector<std::uint8_t> out(k);
    for (int i = 0; i < k; ++i) {
        const std::uint64_t weight = falling_factorial(L - i - 1, k - i - 1);
        const int pos = static_cast<int>(index / weight);
        index %= weight;
        out[i] = remaining[pos];
        for (int j = pos; j + 1 < n_remaining; ++j)
            remaining[j] = remaining[j + 1];
        --n_remaining;
    }
    return out;
}

std::uint64_t sparse_index(std::span<const std::uint8_t> locations, int L) {
    std::uint64_t index = 0;
    for (const std::uint8_t loc : locations) {
        if (loc >= L)
            throw std::out_of_range("sparse_index: location out of range");
        index = index * static_cast<std::uint64_t>(L) + loc;
    }
    return index;
}

} // namespace pdbkit
