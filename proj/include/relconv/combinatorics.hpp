#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace relconv {

/// C(n, k); saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Advances `combo` (strictly increasing indices < n) to its lexicographic
/// successor. Returns false when `combo` was the last one.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n);

/// The `rank`-th k-subset of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k);

/// Calls fn(const std::vector<std::size_t>&) for every k-subset of {0..n-1}
/// in lexicographic order; stops early when fn returns false.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    do {
        if (!fn(static_cast<const std::vector<std::size_t>&>(combo))) return;
    } while (next_combination(combo, n));
}

}  // namespace relconv
