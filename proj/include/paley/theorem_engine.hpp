#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace paley {

/// Open interval (lo, hi) of admissible RIP sparsity exponents gamma.
struct GammaInterval {
    double lo = 0.5;
    double hi = 0.5;
    bool empty() const { return !(hi > lo); }
    bool contains(double g) const { return g > lo && g < hi; }
};

enum class ProofCase { I, II };
std::string to_string(ProofCase c);

/// Parameter bundle of the discrepancy => RIP argument.
struct TheoremParams {
    // Inputs.
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double epsilon = 0.0;

    // Derived by derive_parameters.
    double beta_clamped = 0.0;
    bool beta_was_clamped = false;
    ProofCase proof_case = ProofCase::I;
    std::optional<double> gamma_star;
    std::optional<double> beta_star;
    double beta_effective = 0.0; // beta_star in case II, beta_clamped otherwise
    double tau = 0.0;
    double K_exponent = 0.0;
    double theta_exponent = 0.0;
    double eta = 0.0;
};

/// (1/2, min{1/(2 - beta'), 1/(4 alpha)}) with beta' = min(beta, 1).
/// Requires alpha > 0 and 0 < beta <= 2.
GammaInterval admissible_gamma(double alpha, double beta);

/// Case I iff 2 alpha / (2 - beta_effective) < 1/2.
ProofCase select_case(double alpha, double beta_effective);

struct CaseTwoReduction {
    double gamma_star = 0.0;
    double beta_star = 0.0;
};

/// Moves beta down so that case I applies: gamma* is the midpoint of
/// (gamma, hi) and beta* = 2 - 1/gamma*. Throws when case I already holds or
/// gamma is not admissible.
CaseTwoReduction case2_reduce(double alpha, double beta, double gamma);

/// Completes the bundle: clamps beta, reduces case II, then
///   tau        = max{2 alpha / (2 - b), (2 - b) gamma / 2}
///   K_exponent = 2 tau / (2 - b)
///   theta      = 2 sqrt(3) p^(tau - 1/2)
///   eta        = tau - 1/2 + epsilon
/// with b the effective beta. Asserts tau < 1/2 and K_exponent >= gamma.
TheoremParams derive_parameters(TheoremParams params);

struct DeltaBound {
    double delta = 0.0;   // 300 sqrt(3) p^(tau - 1/2) (2 tau / (2 - b)) ln p
    double target = 0.0;  // p^eta
    bool within_target = false;
};

/// Evaluates the flat-RIP route's delta at a concrete p. `params` must come
/// from derive_parameters.
DeltaBound delta_bound(std::uint64_t p, const TheoremParams& params);

} // namespace paley
