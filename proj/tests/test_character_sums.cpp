#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "paley/character_sums.hpp"
#include "paley/error.hpp"
#include "paley/report_json.hpp"
#include "paley/rng.hpp"

using namespace paley;

namespace {

SupportPair random_pair(SplitMix64& rng, std::uint32_t p) {
    const auto total = 1 + static_cast<std::uint32_t>(uniform_below(rng, std::min<std::uint32_t>(p, 40)));
    const auto a = total - static_cast<std::uint32_t>(uniform_below(rng, total / 2 + 1));
    auto [I, J] = random_disjoint_pair(rng, p, a, total - a);
    return SupportPair::make(p, std::move(I), std::move(J));
}

} // namespace

TEST_CASE("gauss_sum examples") {
    CHECK(gauss_sum(1, Prime1Mod4(5)).real() == doctest::Approx(2.23606798).epsilon(1e-9));
    CHECK(gauss_sum(2, Prime1Mod4(5)).real() == doctest::Approx(-2.23606798).epsilon(1e-9));
    CHECK(gauss_sum(1, Prime1Mod4(13)).real() == doctest::Approx(3.60555128).epsilon(1e-9));
    CHECK(std::abs(gauss_sum(1, Prime1Mod4(13)).imag()) <= 1e-9 * 13);
    CHECK_THROWS_AS(gauss_sum(0, Prime1Mod4(5)), ValidationError);
    CHECK_THROWS_AS(gauss_sum(26, Prime1Mod4(13)), ValidationError);
}

TEST_CASE("gauss_sum equals sqrt(p) chi(c), exhaustive for p <= 101") {
    for (std::uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u, 53u, 61u, 73u, 89u, 97u, 101u}) {
        for (std::uint32_t c = 1; c < p; ++c) {
            const auto g = gauss_sum(c, Prime1Mod4(p));
            const auto ref = oracle::gauss(c, p);
            REQUIRE(std::abs(g - std::sqrt(double(p)) * oracle::chi(c, p)) <= 1e-9 * p);
            REQUIRE(std::abs(std::complex<long double>(g) - ref) <= 1e-9L * p);
        }
    }
}

TEST_CASE("discrepancy_sum examples") {
    const LegendreTable t5(Prime1Mod4(5)), t13(Prime1Mod4(13));
    CHECK(discrepancy_sum(t5, Subset(5, {0, 1, 2, 3, 4})) == 0);
    CHECK(discrepancy_sum(t5, Subset(5, {0, 1})) == 2);
    CHECK(discrepancy_sum(t13, Subset(13, {0, 1, 2})) == 2);
    CHECK(discrepancy_sum(t13, Subset(13, {})) == 0);
}

TEST_CASE("Subset and SupportPair validation") {
    CHECK_THROWS_AS(Subset(5, {0, 0}), ValidationError);
    CHECK_THROWS_AS(Subset(5, {5}), ValidationError);
    const Subset sorted(13, {4, 1});
    CHECK(std::vector<std::uint32_t>(sorted.elems().begin(), sorted.elems().end()) == std::vector<std::uint32_t>{1, 4});
    CHECK_THROWS_AS(SupportPair::make(5, {0, 1}, {1}), ValidationError);
    CHECK_THROWS_AS(SupportPair::make(5, {0}, {1, 2}), ValidationError);
    CHECK_NOTHROW(SupportPair::make(6, {5}, {0}));
    CHECK_THROWS_AS(SupportPair::make(5, {5}, {0}), ValidationError);
}

TEST_CASE("bilinear_sum examples") {
    const LegendreTable t5(Prime1Mod4(5));
    CHECK(bilinear_sum(t5, SupportPair::make(5, {0}, {1})) == 1);
    CHECK(bilinear_sum(t5, SupportPair::make(5, {0, 1}, {2})) == 0);
    CHECK(bilinear_sum(t5, SupportPair::make(5, {0, 3}, {})) == 0);
    // Non-disjoint input is rejected even when built by hand.
    CHECK_THROWS_AS(bilinear_sum(t5, SupportPair{{0, 1}, {1}}), ValidationError);
    // Column p is not an element of F_p.
    CHECK_THROWS_AS(bilinear_sum(t5, SupportPair{{5}, {1}}), ValidationError);
}

TEST_CASE("symmetrization_check examples") {
    const LegendreTable t5(Prime1Mod4(5)), t13(Prime1Mod4(13));
    CHECK(symmetrization_check(t5, SupportPair::make(5, {0}, {1})));
    CHECK(symmetrization_check(t13, SupportPair::make(13, {0, 1, 2}, {})));
    CHECK_THROWS_AS(symmetrization_check(t5, SupportPair{{0}, {0}}), ValidationError);
}

TEST_CASE("property: symmetrization identity, oracle agreement, evenness, spectral ceiling") {
    for (std::uint32_t p : {13u, 101u, 1009u}) {
        const LegendreTable chi(Prime1Mod4{p});
        SplitMix64 rng(0xABCDEF ^ p);
        const int trials = p == 101 ? 1000 : 300;
        for (int t = 0; t < trials; ++t) {
            const auto pair = random_pair(rng, p);
            REQUIRE(symmetrization_check(chi, pair));
            REQUIRE(bilinear_sum(chi, pair) == oracle::bilinear(pair.I, pair.J, p));
            std::vector<std::uint32_t> S;
            std::merge(pair.I.begin(), pair.I.end(), pair.J.begin(), pair.J.end(), std::back_inserter(S));
            const auto d = discrepancy_sum(chi, S);
            REQUIRE(d == oracle::discrepancy(S, p));
            REQUIRE(d % 2 == 0);
            REQUIRE(std::abs(double(d)) <= std::sqrt(double(p)) * S.size() + 1e-9);
        }
    }
}

TEST_CASE("verify_discrepancy_condition examples") {
    const Prime1Mod4 p13(13), p5(5);
    SUBCASE("p=13, alpha=0.9 holds for moderate beta") {
        for (double beta : {0.5, 1.0, 1.5}) {
            const auto r = verify_discrepancy_condition(p13, 0.9, beta, {});
            CHECK(r.holds);
            // |S| in {11, 12, 13}: binom(13,11) + 13 + 1 subsets.
            CHECK(r.checked == 78 + 13 + 1);
            CHECK(r.max_abs_sum == 2);
            CHECK(r.finite_evidence_only);
        }
    }
    SUBCASE("p=13, alpha=0.1, beta=1.99 is violated") {
        const auto r = verify_discrepancy_condition(p13, 0.1, 1.99, {});
        CHECK_FALSE(r.holds);
        CHECK_FALSE(r.violations.empty());
        // Oracle: count violating subsets by brute force.
        std::size_t expected = 0;
        const double floor_size = std::pow(13.0, 0.1);
        for (std::uint64_t mask = 1; mask < (1u << 13); ++mask) {
            const auto S = oracle::bits(mask);
            if (!(double(S.size()) > floor_size)) continue;
            if (!(std::abs(double(oracle::discrepancy(S, 13))) < std::pow(double(S.size()), 0.01))) ++expected;
        }
        CHECK(r.violations.size() == expected);
        for (const auto& v : r.violations) {
            CHECK(std::abs(double(oracle::discrepancy(v, 13))) >= std::pow(double(v.size()), 0.01));
        }
    }
    SUBCASE("p=5, alpha=0.99, beta=1") {
        const auto r = verify_discrepancy_condition(p5, 0.99, 1.0, {});
        CHECK(r.holds);
        CHECK(r.checked == 1); // only S = F_5 exceeds 5^0.99
        CHECK(r.max_abs_sum == 0);
    }
    SUBCASE("equality counts as a violation") {
        // S = {0, 1} in F_5: |D| = 2 = |S|^(2 - 1).
        const auto r = verify_discrepancy_condition(p5, 0.01, 1.0, {});
        CHECK(std::find(r.violations.begin(), r.violations.end(), std::vector<std::uint32_t>{0, 1}) !=
              r.violations.end());
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(verify_discrepancy_condition(Prime1Mod4(29), 0.5, 1.0, {}), ValidationError);
        CHECK_THROWS_AS(verify_discrepancy_condition(p13, 0.5, 1.0, {.mode = EnumerationMode::Sampled}),
                        ValidationError);
        CHECK_THROWS_AS(verify_discrepancy_condition(p13, 1.0, 1.0, {}), ValidationError);
        CHECK_THROWS_AS(verify_discrepancy_condition(p13, 0.5, 2.5, {}), ValidationError);
    }
}

TEST_CASE("verify_discrepancy_condition sampled mode is worker-independent") {
    const DiscrepancyOptions one{.mode = EnumerationMode::Sampled, .samples = 2000, .seed = 7, .workers = 1};
    DiscrepancyOptions many = one;
    many.workers = 5;
    const auto a = verify_discrepancy_condition(Prime1Mod4(101), 0.3, 1.0, one);
    const auto b = verify_discrepancy_condition(Prime1Mod4(101), 0.3, 1.0, many);
    CHECK(a.max_abs_sum == b.max_abs_sum);
    CHECK(a.witness == b.witness);
    CHECK(a.violations == b.violations);
    CHECK(a.checked == 2000);
    CHECK(nlohmann::json(a).dump() == nlohmann::json(b).dump());
}

TEST_CASE("lemma_bound_check") {
    const LegendreTable t5(Prime1Mod4(5));
    CHECK(lemma_ratio(t5, SupportPair::make(5, {0}, {1}), 0.5) ==
          doctest::Approx(1.0 / (std::sqrt(5.0) * std::sqrt(3.0))).epsilon(1e-12));
    CHECK(lemma_ratio(t5, SupportPair::make(5, {0}, {1}), 0.5) == doctest::Approx(0.258).epsilon(1e-3));

    const auto r = lemma_bound_check(Prime1Mod4(101), 0.25, 1.0, 0.5, 10000, 42);
    CHECK(r.holds_on_sample);
    CHECK(r.worst_ratio <= 1.0);
    CHECK(r.max_size == 100);
    CHECK(r.witness.J.size() <= r.witness.I.size());
    CHECK(r.witness.I.size() <= r.max_size);
    const LegendreTable t101(Prime1Mod4(101));
    CHECK(lemma_ratio(t101, r.witness, 0.5) == r.worst_ratio);
    CHECK(nlohmann::json(r).dump() ==
          nlohmann::json(lemma_bound_check(Prime1Mod4(101), 0.25, 1.0, 0.5, 10000, 42, 3)).dump());

    CHECK_THROWS_AS(lemma_bound_check(Prime1Mod4(101), 0.4, 1.0, 0.5, 10, 1), ValidationError);
    CHECK_NOTHROW(lemma_bound_check(Prime1Mod4(101), 0.4, 1.0, 0.8, 10, 1));
}

TEST_CASE("lemma trivial branch: |I||J| <= 3 p^(2 tau) forces ratio <= 1") {
    SplitMix64 rng(99);
    for (std::uint32_t p : {13u, 101u}) {
        const LegendreTable chi(Prime1Mod4{p});
        for (double tau : {0.1, 0.25, 0.4}) {
            for (int t = 0; t < 300; ++t) {
                const auto pair = random_pair(rng, p);
                if (pair.J.empty()) continue;
                if (double(pair.I.size() * pair.J.size()) <= 3.0 * std::pow(double(p), 2 * tau)) {
                    REQUIRE(lemma_ratio(chi, pair, tau) <= 1.0);
                }
            }
        }
    }
}

TEST_CASE("estimate_beta") {
    const Prime1Mod4 p101(101);
    SUBCASE("full field") {
        const std::vector<std::uint32_t> sizes{101};
        const auto r = estimate_beta(p101, sizes, 10, 1);
        REQUIRE(r.size() == 1);
        CHECK(r[0].max_abs_sum == 0);
        CHECK_FALSE(r[0].beta_hat.has_value());
        CHECK(nlohmann::json(r[0])["beta_hat"].is_null());
    }
    SUBCASE("n = 10 stays below the spectral ceiling") {
        const std::vector<std::uint32_t> sizes{10};
        const auto r = estimate_beta(p101, sizes, 10000, 42);
        CHECK(r[0].max_abs_sum <= std::sqrt(101.0) * 10);
        CHECK(r[0].max_abs_sum == std::abs(oracle::discrepancy(r[0].witness, 101)));
        REQUIRE(r[0].beta_hat.has_value());
        CHECK(*r[0].beta_hat ==
              doctest::Approx(2.0 - std::log(double(r[0].max_abs_sum)) / std::log(10.0)).epsilon(1e-12));
    }
    SUBCASE("n = 2 hits an edge") {
        const std::vector<std::uint32_t> sizes{2};
        const auto r = estimate_beta(p101, sizes, 200, 3);
        CHECK(r[0].max_abs_sum == 2);
        CHECK(*r[0].beta_hat == doctest::Approx(1.0));
    }
    SUBCASE("worker independence") {
        const std::vector<std::uint32_t> sizes{5, 20, 50};
        CHECK(nlohmann::json(estimate_beta(p101, sizes, 500, 9, 1)).dump() ==
              nlohmann::json(estimate_beta(p101, sizes, 500, 9, 4)).dump());
    }
    SUBCASE("size preconditions") {
        const std::vector<std::uint32_t> bad{1};
        CHECK_THROWS_AS(estimate_beta(p101, bad, 10, 1), ValidationError);
        const std::vector<std::uint32_t> big{102};
        CHECK_THROWS_AS(estimate_beta(p101, big, 10, 1), ValidationError);
    }
}

TEST_CASE("discrepancy report JSON carries the documented keys") {
    const auto r = verify_discrepancy_condition(Prime1Mod4(13), 0.9, 1.0, {});
    const nlohmann::json j = r;
    for (const char* key : {"p", "alpha", "beta", "mode", "samples", "seed", "max_abs_sum", "witness", "beta_hat",
                            "holds"}) {
        CHECK_MESSAGE(j.contains(key), key);
    }
    CHECK(j["mode"] == "exhaustive");
}
