#include "paley/theorem_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paley/error.hpp"

namespace paley {

namespace {

void validate_alpha_beta(double alpha, double beta) {
    if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
    if (!(beta > 0.0 && beta <= 2.0)) throw ValidationError("beta must lie in (0, 2]");
}

double clamp_beta(double beta) { return std::min(beta, 1.0); }

} // namespace

std::string to_string(ProofCase c) { return c == ProofCase::I ? "I" : "II"; }

GammaInterval admissible_gamma(double alpha, double beta) {
    validate_alpha_beta(alpha, beta);
    const double b = clamp_beta(beta);
    return GammaInterval{0.5, std::min(1.0 / (2.0 - b), 1.0 / (4.0 * alpha))};
}

ProofCase select_case(double alpha, double beta_effective) {
    validate_alpha_beta(alpha, beta_effective);
    if (beta_effective > 1.0) throw ValidationError("select_case expects beta <= 1 (clamp first)");
    return 2.0 * alpha / (2.0 - beta_effective) < 0.5 ? ProofCase::I : ProofCase::II;
}

CaseTwoReduction case2_reduce(double alpha, double beta, double gamma) {
    const GammaInterval interval = admissible_gamma(alpha, beta);
    if (!interval.contains(gamma)) {
        throw ValidationError("gamma must lie strictly inside the admissible interval");
    }
    const double b = clamp_beta(beta);
    if (select_case(alpha, b) == ProofCase::I) {
        throw ValidationError("case I holds; no reduction needed");
    }
    CaseTwoReduction out;
    out.gamma_star = 0.5 * (gamma + interval.hi);
    out.beta_star = 2.0 - 1.0 / out.gamma_star;

    if (!(out.gamma_star > gamma && out.gamma_star < interval.hi)) {
        throw ValidationError("gamma leaves no room below the interval edge for gamma*");
    }
    if (!(out.beta_star < b)) throw std::logic_error("case II reduction did not decrease beta");
    if (!admissible_gamma(alpha, out.beta_star).contains(gamma)) {
        throw std::logic_error("gamma is not admissible under beta*");
    }
    if (!(2.0 * alpha / (2.0 - out.beta_star) < 0.5)) {
        throw std::logic_error("case II reduction did not reach case I");
    }
    return out;
}

TheoremParams derive_parameters(TheoremParams params) {
    if (!(params.alpha > 0.0 && params.alpha < 0.5)) throw ValidationError("alpha must lie in (0, 1/2)");
    validate_alpha_beta(params.alpha, params.beta);
    if (!(params.epsilon > 0.0)) throw ValidationError("epsilon must be positive");
    const GammaInterval interval = admissible_gamma(params.alpha, params.beta);
    if (!interval.contains(params.gamma)) {
        throw ValidationError("gamma must satisfy 1/2 < gamma < " + std::to_string(interval.hi));
    }

    params.beta_clamped = clamp_beta(params.beta);
    params.beta_was_clamped = params.beta > 1.0;
    params.proof_case = select_case(params.alpha, params.beta_clamped);
    params.gamma_star.reset();
    params.beta_star.reset();
    params.beta_effective = params.beta_clamped;
    if (params.proof_case == ProofCase::II) {
        const auto reduced = case2_reduce(params.alpha, params.beta, params.gamma);
        params.gamma_star = reduced.gamma_star;
        params.beta_star = reduced.beta_star;
        params.beta_effective = reduced.beta_star;
    }

    const double gap = 2.0 - params.beta_effective;
    params.tau = std::max(2.0 * params.alpha / gap, gap / 2.0 * params.gamma);
    params.K_exponent = 2.0 * params.tau / gap;
    params.theta_exponent = params.tau - 0.5;
    params.eta = params.tau - 0.5 + params.epsilon;

    if (!(params.tau < 0.5)) throw std::logic_error("derived tau is not below 1/2");
    // K_exponent equals gamma up to rounding when the second branch wins.
    if (!(params.K_exponent >= params.gamma - 1e-12)) {
        throw std::logic_error("derived K exponent falls below gamma");
    }
    return params;
}

DeltaBound delta_bound(std::uint64_t p, const TheoremParams& params) {
    if (p < 2) throw ValidationError("delta_bound needs p >= 2");
    if (!(params.tau > 0.0) || !(params.beta_effective > 0.0)) {
        throw ValidationError("delta_bound needs parameters completed by derive_parameters");
    }
    const double pd = static_cast<double>(p);
    DeltaBound out;
    out.delta = 300.0 * std::sqrt(3.0) * std::pow(pd, params.tau - 0.5) *
                (2.0 * params.tau / (2.0 - params.beta_effective)) * std::log(pd);
    out.target = std::pow(pd, params.eta);
    out.within_target = out.delta <= out.target;
    return out;
}

} // namespace paley
