#include "relconv/combinatorics.hpp"

#include <limits>

namespace relconv {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    __extension__ using u128 = unsigned __int128;
    u128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
    std::vector<std::size_t> combo;
    combo.reserve(k);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        // Skip whole blocks of combinations that start with a smaller element.
        for (;; ++next) {
            const std::uint64_t block = binomial(n - next - 1, k - slot - 1);
            if (rank < block) break;
            rank -= block;
        }
        combo.push_back(next++);
    }
    return combo;
}

}  // namespace relconv
