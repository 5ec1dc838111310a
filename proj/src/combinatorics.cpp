#include "paley/combinatorics.hpp"

#include <limits>

namespace paley {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // Exact at every step: result * (n-k+i) is divisible by i.
        result = result * (n - k + i) / i;
        if (result > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k, std::uint64_t rank) {
    std::vector<std::uint32_t> comb;
    comb.reserve(k);
    std::uint32_t next = 0;
    for (std::uint32_t slot = 0; slot < k; ++slot) {
        // Skip over blocks of subsets whose element at `slot` is smaller.
        while (true) {
            const std::uint64_t block = binomial(n - next - 1, k - slot - 1);
            if (rank < block) break;
            rank -= block;
            ++next;
        }
        comb.push_back(next++);
    }
    return comb;
}

bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t n) {
    const auto k = static_cast<std::uint32_t>(comb.size());
    for (std::uint32_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace paley
