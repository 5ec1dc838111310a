#include <doctest.h>

#include <cmath>

#include "paley/error.hpp"
#include "paley/report_json.hpp"
#include "paley/rng.hpp"
#include "paley/theorem_engine.hpp"

using namespace paley;

namespace {

TheoremParams input(double alpha, double beta, double gamma, double epsilon = 0.01) {
    TheoremParams t;
    t.alpha = alpha;
    t.beta = beta;
    t.gamma = gamma;
    t.epsilon = epsilon;
    return t;
}

double unit(SplitMix64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

TEST_CASE("admissible_gamma examples") {
    const auto a = admissible_gamma(0.1, 0.5);
    CHECK(a.lo == 0.5);
    CHECK(a.hi == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(admissible_gamma(0.1, 0.8).hi == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(admissible_gamma(0.5, 0.5).empty());
    CHECK(admissible_gamma(0.3, 1.0).hi == doctest::Approx(0.8333333333).epsilon(1e-9));
    CHECK(admissible_gamma(0.1, 1.7).hi == admissible_gamma(0.1, 1.0).hi);
}

TEST_CASE("select_case examples") {
    CHECK(select_case(0.1, 0.5) == ProofCase::I);
    CHECK(select_case(0.3, 1.0) == ProofCase::II);
    CHECK(select_case(0.125, 1.0) == ProofCase::I);
    CHECK(select_case(0.25, 1.0) == ProofCase::II);
    CHECK(select_case(0.2499, 1.0) == ProofCase::I);
    CHECK_THROWS_AS(select_case(0.1, 1.2), ValidationError);
}

TEST_CASE("case2_reduce example") {
    const auto r = case2_reduce(0.3, 1.0, 0.6);
    CHECK(r.gamma_star == doctest::Approx(0.716667).epsilon(1e-6));
    CHECK(r.beta_star == doctest::Approx(0.604651).epsilon(1e-6));
    const double post = 2 * 0.3 / (2 - r.beta_star);
    CHECK(post == doctest::Approx(0.4300).epsilon(1e-4));
    CHECK(post < 0.5);
    CHECK_THROWS_AS(case2_reduce(0.1, 0.5, 0.6), ValidationError);
    CHECK_THROWS_AS(case2_reduce(0.3, 1.0, 0.9), ValidationError);
}

TEST_CASE("derive_parameters examples") {
    const auto a = derive_parameters(input(0.1, 0.5, 0.6));
    CHECK(a.proof_case == ProofCase::I);
    CHECK(std::abs(a.tau - 0.45) <= 1e-12);
    CHECK(std::abs(a.K_exponent - 0.6) <= 1e-12);
    CHECK(std::abs(a.theta_exponent + 0.05) <= 1e-12);
    CHECK(std::abs(a.eta + 0.04) <= 1e-12);
    CHECK_FALSE(a.gamma_star.has_value());

    const auto b = derive_parameters(input(0.1, 0.5, 0.51));
    CHECK(std::abs(b.tau - 0.3825) <= 1e-12);
    CHECK(std::abs(b.K_exponent - 0.51) <= 1e-12);

    const auto c = derive_parameters(input(0.3, 1.0, 0.6));
    CHECK(c.proof_case == ProofCase::II);
    REQUIRE(c.gamma_star.has_value());
    CHECK(*c.beta_star == c.beta_effective);
    CHECK(c.tau < 0.5);
    CHECK(c.K_exponent >= c.gamma - 1e-12);

    CHECK_THROWS_AS(derive_parameters(input(0.1, 0.5, 0.7)), ValidationError);
    CHECK_THROWS_AS(derive_parameters(input(0.1, 0.5, 0.5)), ValidationError);
    CHECK_THROWS_AS(derive_parameters(input(0.5, 0.5, 0.55)), ValidationError);
    CHECK_THROWS_AS(derive_parameters(input(0.1, 0.5, 0.6, 0.0)), ValidationError);
    CHECK_THROWS_AS(derive_parameters(input(0.1, 2.5, 0.6)), ValidationError);
}

TEST_CASE("beta above one is clamped") {
    const auto t = derive_parameters(input(0.1, 1.5, 0.6));
    CHECK(t.beta_was_clamped);
    CHECK(t.beta_clamped == 1.0);
    const auto u = derive_parameters(input(0.1, 1.0, 0.6));
    CHECK_FALSE(u.beta_was_clamped);
    CHECK(t.tau == u.tau);
    CHECK(t.K_exponent == u.K_exponent);
}

TEST_CASE("randomized parameter properties") {
    SplitMix64 rng(20240611);
    int case_two = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const double alpha = 0.01 + 0.48 * unit(rng);
        const double beta = 0.01 + 1.98 * unit(rng);
        const auto interval = admissible_gamma(alpha, beta);
        if (interval.empty()) continue;
        const double gamma = interval.lo + (interval.hi - interval.lo) * (0.02 + 0.96 * unit(rng));
        const auto t = derive_parameters(input(alpha, beta, gamma, 0.05));
        REQUIRE(t.tau < 0.5);
        REQUIRE(t.K_exponent >= gamma - 1e-12);
        REQUIRE(std::abs(t.K_exponent - 2 * t.tau / (2 - t.beta_effective)) <= 1e-12);
        REQUIRE(std::abs(t.eta - (t.tau - 0.5 + 0.05)) <= 1e-12);
        if (alpha < 0.25) REQUIRE(interval.hi > 0.5);
        if (t.proof_case == ProofCase::II) {
            ++case_two;
            // The reduced beta is already case I and is accepted as input.
            REQUIRE(select_case(alpha, *t.beta_star) == ProofCase::I);
            REQUIRE(admissible_gamma(alpha, *t.beta_star).contains(gamma));
            const auto again = derive_parameters(input(alpha, *t.beta_star, gamma, 0.05));
            REQUIRE(again.proof_case == ProofCase::I);
            REQUIRE(std::abs(again.tau - t.tau) <= 1e-12);
        }
    }
    CHECK(case_two > 0);
}

TEST_CASE("upper edge of the gamma interval is monotone") {
    for (double alpha : {0.05, 0.1, 0.2, 0.3, 0.45}) {
        double previous = 0.0;
        for (double beta = 0.05; beta <= 1.0; beta += 0.05) {
            const double hi = admissible_gamma(alpha, beta).hi;
            CHECK(hi >= previous);
            previous = hi;
        }
    }
    for (double beta : {0.2, 0.7, 1.0}) {
        double previous = 10.0;
        for (double alpha = 0.05; alpha < 0.5; alpha += 0.05) {
            const double hi = admissible_gamma(alpha, beta).hi;
            CHECK(hi <= previous);
            previous = hi;
        }
    }
}

TEST_CASE("delta_bound") {
    const auto t = derive_parameters(input(0.1, 0.5, 0.6, 0.01));
    const auto small = delta_bound(101, t);
    CHECK_FALSE(small.within_target);
    CHECK(small.target == doctest::Approx(std::pow(101.0, t.eta)).epsilon(1e-14));
    const double unit_factor = 300 * std::sqrt(3.0) * (2 * t.tau / (2 - t.beta_effective));
    for (double p : {101.0, 1e4, 1e8}) {
        const auto d = delta_bound(static_cast<std::uint64_t>(p), t);
        CHECK(d.delta == doctest::Approx(unit_factor * std::pow(p, t.tau - 0.5) * std::log(p)).epsilon(1e-12));
    }
    // With eta above tau - 1/2 the ratio delta / target behaves like ln p / p^eps and
    // eventually drops below one.
    CHECK(delta_bound(std::uint64_t{1} << 62, derive_parameters(input(0.1, 0.5, 0.6, 0.3))).within_target);
    CHECK_THROWS_AS(delta_bound(1, t), ValidationError);
    CHECK_THROWS_AS(delta_bound(101, TheoremParams{}), ValidationError);
}

TEST_CASE("theorem parameters JSON round trip") {
    const auto t = derive_parameters(input(0.3, 1.0, 0.6));
    const nlohmann::json j = t;
    CHECK(j.at("case") == "II");
    CHECK(j.at("gamma_star").is_number());
    const auto back = derive_parameters(j.get<TheoremParams>());
    CHECK(nlohmann::json(back).dump() == j.dump());
    CHECK(nlohmann::json(derive_parameters(input(0.1, 0.5, 0.6))).at("gamma_star").is_null());
}
