#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace paley {

/// SplitMix64 (Steele, Lea, Flood 2014). Defined purely in terms of 64-bit
/// integer arithmetic, so streams are bit-identical on every platform.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Independent stream for sample number `index` under `master_seed`.
/// Every sample owns its stream, so results never depend on how samples are
/// distributed over workers.
inline SplitMix64 sample_stream(std::uint64_t master_seed, std::uint64_t index) {
    SplitMix64 mixer(master_seed ^ (index * 0xD1B54A32D192ED03ULL));
    mixer();
    return SplitMix64(mixer() + index);
}

/// Uniform integer in [0, bound) by rejection, bound > 0. std::uniform_int_distribution
/// is implementation-defined, hence this.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

/// Uniform random k-subset of {0, ..., n-1} in draw order. Partial Fisher-Yates.
inline std::vector<std::uint32_t> random_subset(SplitMix64& rng, std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::uint32_t>(uniform_below(rng, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

/// Uniform random disjoint pair (I, J) with |I| = a, |J| = b from {0, ..., n-1},
/// each side sorted.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
random_disjoint_pair(SplitMix64& rng, std::uint32_t n, std::uint32_t a, std::uint32_t b) {
    const auto drawn = random_subset(rng, n, a + b);
    std::vector<std::uint32_t> I(drawn.begin(), drawn.begin() + a);
    std::vector<std::uint32_t> J(drawn.begin() + a, drawn.end());
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    return {std::move(I), std::move(J)};
}

} // namespace paley
