#pragma once

#include <cstdint>
#include <vector>

namespace paley {

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// The `rank`-th k-subset of {0, ..., n-1} in lexicographic order.
std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k, std::uint64_t rank);

/// Advances a sorted k-subset of {0, ..., n-1} to its lexicographic successor.
/// Returns false once the last subset has been passed.
bool next_combination(std::vector<std::uint32_t>& comb, std::uint32_t n);

} // namespace paley
