#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "paley/character_sums.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_matrix.hpp"

namespace paley {

struct HermitianEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors; // column k pairs with values[k]; empty unless requested
};

/// Spectrum of a Hermitian matrix. Throws ValidationError when
/// max |G - G^*| exceeds `tol`.
HermitianEigen hermitian_eigs(const Eigen::MatrixXcd& g, double tol, bool with_vectors = false);

/// Spectrum of a real symmetric matrix, ascending.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& g);

enum class RipMode { Exact, Sampled };
std::string to_string(RipMode mode);

struct RipReport {
    std::uint32_t p = 0;
    std::uint32_t K = 0;
    RipMode mode = RipMode::Exact;
    double delta = 0.0;
    std::vector<std::uint32_t> witness_support;
    std::uint64_t supports_checked = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct FlatRipReport {
    std::uint32_t p = 0;
    std::uint32_t K = 0;
    RipMode mode = RipMode::Exact;
    double theta = 0.0;
    /// sqrt(p) <sum_I phi_i, sum_J phi_j> at the witness; always an integer.
    std::int64_t scaled_inner_product = 0;
    SupportPair witness;
    std::uint64_t pairs_checked = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct EnumerationOptions {
    std::uint64_t cap = 10'000'000;
    unsigned workers = 0;
};

/// max(lambda_max - 1, 1 - lambda_min) of the analytic Gram on `support`.
double rip_deviation(const LegendreTable& chi, std::span<const std::uint32_t> support);

/// Exact delta_K by enumerating every K-column support.
///
/// Only |T| = K is enumerated: by Cauchy interlacing the spectrum of a principal
/// submatrix lies inside the spectrum range of the full matrix, so the deviation
/// can only grow as columns are added and the maximum over |T| <= K is attained
/// at |T| = K. Ties between supports go to the lexicographically smallest one.
/// Throws CapExceeded when binom(p + 1, K) exceeds the cap.
RipReport rip_constant_exact(const Prime1Mod4& p, std::uint32_t K,
                             const EnumerationOptions& options = {});

/// Lower bound on delta_K from uniformly sampled K-supports.
RipReport rip_constant_sampled(const Prime1Mod4& p, std::uint32_t K, std::uint64_t samples,
                               std::uint64_t seed, unsigned workers = 0);

/// Maximum deviation over an explicit list of K-supports (reported as sampled).
RipReport rip_constant_over(const Prime1Mod4& p, std::uint32_t K,
                            std::span<const std::vector<std::uint32_t>> supports);

/// sqrt(p) <sum_I phi_i, sum_J phi_j> from the closed-form Gram: the chi sum
/// over pairs inside F_p plus one unit per pair touching column p.
std::int64_t scaled_flat_inner_product(const LegendreTable& chi, const SupportPair& pair);

/// |<sum_I phi_i, sum_J phi_j>| / sqrt(|I| |J|) from the closed-form Gram.
double flat_ratio(const LegendreTable& chi, const SupportPair& pair);

/// <sum_I phi_i, sum_J phi_j> evaluated on the materialized matrix.
std::complex<double> flat_inner_product(const PaleyMatrix& phi, const SupportPair& pair);

/// Exact flat-RIP constant over all disjoint I, J in {0..p} with
/// 1 <= |J| <= |I| <= K. Ratios are compared exactly as rationals.
FlatRipReport flat_rip_exact(const Prime1Mod4& p, std::uint32_t K,
                             const EnumerationOptions& options = {});

FlatRipReport flat_rip_sampled(const Prime1Mod4& p, std::uint32_t K, std::uint64_t samples,
                               std::uint64_t seed, unsigned workers = 0);

FlatRipReport flat_rip_over(const Prime1Mod4& p, std::uint32_t K,
                            std::span<const SupportPair> pairs);

/// RIP constant implied by a (K, theta)-flat RIP for unit-norm columns:
/// 150 theta ln K. Natural log; the base is not pinned down by the source
/// bound, and this is the one place to change it.
double rip_from_flat(double theta, std::uint32_t K);

} // namespace paley
