#include "paley/finite_field.hpp"

#include <algorithm>
#include <string>

#include "paley/error.hpp"

namespace paley {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, unsigned s, std::uint64_t witness) {
    std::uint64_t x = pow_mod(witness % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set of Jaeschke / Sinclair: deterministic below 2^64.
    for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        if (!miller_rabin_round(n, d, s, a)) return false;
    }
    return true;
}

bool is_prime_1mod4(std::uint64_t n) { return n % 4 == 1 && is_prime(n); }

Prime1Mod4::Prime1Mod4(std::uint64_t p) {
    if (p > kMaxPrime) {
        throw ValidationError("p = " + std::to_string(p) + " exceeds the cap 2^31-1");
    }
    if (!is_prime_1mod4(p)) {
        throw ValidationError("p = " + std::to_string(p) + " is not a prime congruent to 1 mod 4");
    }
    p_ = static_cast<std::uint32_t>(p);
}

int legendre(std::int64_t x, const Prime1Mod4& p) {
    const std::uint32_t r = p.reduce(x);
    if (r == 0) return 0;
    const std::uint64_t e = pow_mod(r, (p.value() - 1) / 2, p.value());
    return e == 1 ? 1 : -1;
}

LegendreTable::LegendreTable(const Prime1Mod4& p) : p_(p), chi_(p.value(), -1) {
    const std::uint64_t n = p.value();
    chi_[0] = 0;
    // y and p - y share a square, so y <= (p-1)/2 enumerates Q exactly once.
    residues_.reserve((n + 1) / 2);
    for (std::uint64_t y = 0; y <= (n - 1) / 2; ++y) {
        const auto sq = static_cast<std::uint32_t>(y * y % n);
        residues_.push_back(sq);
        if (sq != 0) chi_[sq] = 1;
    }
    std::sort(residues_.begin(), residues_.end());
}

std::uint32_t LegendreTable::smallest_nonresidue() const {
    for (std::uint32_t x = 2; x < p(); ++x) {
        if (chi_[x] == -1) return x;
    }
    return 0; // unreachable for odd primes
}

LegendreTable build_table(const Prime1Mod4& p) { return LegendreTable(p); }

} // namespace paley
