#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "paley/error.hpp"
#include "paley/finite_field.hpp"

using namespace paley;

TEST_CASE("is_prime_1mod4 examples") {
    CHECK(is_prime_1mod4(5));
    CHECK(is_prime_1mod4(13));
    CHECK_FALSE(is_prime_1mod4(7));
    CHECK_FALSE(is_prime_1mod4(2));
    CHECK_FALSE(is_prime_1mod4(25));
    CHECK_FALSE(is_prime_1mod4(1));
}

TEST_CASE("primality agrees with trial division below 10^5") {
    for (std::uint64_t n = 2; n < 100000; ++n) {
        REQUIRE_MESSAGE(is_prime(n) == oracle::is_prime(n), n);
    }
}

TEST_CASE("primality near the 32-bit boundary") {
    CHECK(is_prime(2147483647ULL));   // 2^31 - 1
    CHECK(is_prime(4294967291ULL));   // largest 32-bit prime
    CHECK_FALSE(is_prime(4294967297ULL)); // F5 = 641 * 6700417
    CHECK_FALSE(is_prime(3215031751ULL)); // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime_1mod4(2147483629ULL) == (2147483629ULL % 4 == 1 && oracle::is_prime(2147483629ULL)));
}

TEST_CASE("Prime1Mod4 validation") {
    CHECK_NOTHROW(Prime1Mod4(5));
    CHECK_THROWS_AS(Prime1Mod4(7), ValidationError);
    CHECK_THROWS_AS(Prime1Mod4(21), ValidationError);
    CHECK_THROWS_AS(Prime1Mod4(4294967357ULL), ValidationError); // above the 2^31-1 cap
    CHECK(Prime1Mod4(13).reduce(-1) == 12);
    CHECK(Prime1Mod4(13).reduce(27) == 1);
}

TEST_CASE("legendre examples") {
    CHECK(legendre(0, Prime1Mod4(5)) == 0);
    CHECK(legendre(2, Prime1Mod4(5)) == -1);
    CHECK(legendre(3, Prime1Mod4(13)) == 1);
    CHECK(legendre(-1, Prime1Mod4(13)) == 1);
    CHECK(legendre(18, Prime1Mod4(13)) == legendre(5, Prime1Mod4(13)));
}

TEST_CASE("build_table examples") {
    const auto t5 = build_table(Prime1Mod4(5));
    CHECK(std::vector<std::uint32_t>(t5.residues().begin(), t5.residues().end()) ==
          std::vector<std::uint32_t>{0, 1, 4});
    const auto t13 = build_table(Prime1Mod4(13));
    CHECK(std::vector<std::uint32_t>(t13.residues().begin(), t13.residues().end()) ==
          std::vector<std::uint32_t>{0, 1, 3, 4, 9, 10, 12});
    int sum = 0;
    for (auto v : t5.values()) sum += v;
    CHECK(sum == 0);
    CHECK(t13.smallest_nonresidue() == 2);
    CHECK(build_table(Prime1Mod4(17)).smallest_nonresidue() == 3);
}

TEST_CASE("legendre matches the squaring oracle for every admissible p <= 10^4") {
    for (std::uint32_t p = 5; p <= 10000; p += 4) {
        if (!oracle::is_prime(p)) continue;
        const Prime1Mod4 prime(p);
        const LegendreTable table(prime);
        const auto squares = oracle::nonzero_squares(p);
        REQUIRE(table.residues().size() == (p + 1) / 2);
        for (std::uint32_t x = 0; x < p; ++x) {
            const int expected = x == 0 ? 0 : (squares.count(x) ? 1 : -1);
            REQUIRE(table.chi(x) == expected);
        }
        // Euler's criterion spot-checked on a stride to keep this fast.
        for (std::uint32_t x = 0; x < p; x += 1 + p / 64) REQUIRE(legendre(x, prime) == table.chi(x));
    }
}

TEST_CASE("table invariants: multiplicative and even, exhaustive for p <= 101") {
    for (std::uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u, 53u, 61u, 73u, 89u, 97u, 101u}) {
        const LegendreTable t(Prime1Mod4{p});
        int positives = 0;
        for (std::uint32_t x = 0; x < p; ++x) {
            positives += t.chi(x) == 1;
            REQUIRE(t.chi(x) == t(-static_cast<std::int64_t>(x)));
            for (std::uint32_t y = 0; y < p; ++y) {
                REQUIRE(t.chi(static_cast<std::uint32_t>(std::uint64_t{x} * y % p)) == t.chi(x) * t.chi(y));
            }
        }
        CHECK(positives == static_cast<int>((p - 1) / 2));
    }
}
