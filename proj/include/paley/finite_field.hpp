#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace paley {

/// Largest modulus accepted anywhere in the library (2^31 - 1).
inline constexpr std::uint64_t kMaxPrime = 2147483647ULL;

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(std::uint64_t n);

/// True iff n is prime and n = 1 (mod 4).
bool is_prime_1mod4(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// A prime p = 1 (mod 4), p <= kMaxPrime. Construction validates.
class Prime1Mod4 {
public:
    explicit Prime1Mod4(std::uint64_t p);

    std::uint32_t value() const { return p_; }
    operator std::uint32_t() const { return p_; }

    /// x mod p for any signed x, in [0, p).
    std::uint32_t reduce(std::int64_t x) const {
        const std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

private:
    std::uint32_t p_;
};

/// Legendre symbol by Euler's criterion: x^((p-1)/2) mod p, with p-1 read as -1.
int legendre(std::int64_t x, const Prime1Mod4& p);

/// Memoized Legendre symbol over all of F_p and the set Q of squares
/// (0 included), ascending.
class LegendreTable {
public:
    explicit LegendreTable(const Prime1Mod4& p);

    const Prime1Mod4& prime() const { return p_; }
    std::uint32_t p() const { return p_.value(); }

    /// chi(x) for x already in [0, p).
    int chi(std::uint32_t x) const { return chi_[x]; }
    /// chi(a - b) for a, b in [0, p).
    int chi_diff(std::uint32_t a, std::uint32_t b) const {
        return chi_[a >= b ? a - b : a + p_.value() - b];
    }
    int operator()(std::int64_t x) const { return chi_[p_.reduce(x)]; }

    std::span<const std::int8_t> values() const { return chi_; }
    std::span<const std::uint32_t> residues() const { return residues_; }

    /// Smallest quadratic non-residue.
    std::uint32_t smallest_nonresidue() const;

private:
    Prime1Mod4 p_;
    std::vector<std::int8_t> chi_;
    std::vector<std::uint32_t> residues_;
};

LegendreTable build_table(const Prime1Mod4& p);

} // namespace paley
