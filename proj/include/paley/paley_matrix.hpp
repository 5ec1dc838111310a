#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include <Eigen/Dense>

#include "paley/finite_field.hpp"

namespace paley {

/// Largest p for which the dense matrix is materialized.
inline constexpr std::uint32_t kMaxDensePrime = 100000;

/// The M x (p+1) Paley matrix, M = (p+1)/2.
///
/// Row r (r = 0..(p-1)/2) carries frequency r^2 mod p, which lists every square
/// exactly once with 0 first. Column j < p has entries
///     c_r * exp(-2 pi i (r^2 j mod p) / p),  c_0 = sqrt(1/p), c_r = sqrt(2/p),
/// and column p is the first standard basis vector. Every column has unit norm.
class PaleyMatrix {
public:
    explicit PaleyMatrix(const Prime1Mod4& p);

    std::uint32_t p() const { return p_.value(); }
    const Prime1Mod4& prime() const { return p_; }
    Eigen::Index rows() const { return entries_.rows(); }
    Eigen::Index cols() const { return entries_.cols(); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    std::complex<double> operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

    double first_row_scale() const { return std::sqrt(1.0 / p()); }
    double other_row_scale() const { return std::sqrt(2.0 / p()); }

private:
    Prime1Mod4 p_;
    Eigen::MatrixXcd entries_;
};

PaleyMatrix build(const Prime1Mod4& p);

/// G[i, j] = <phi_i, phi_j> = sum_r Phi[r, i] conj(Phi[r, j]).
Eigen::MatrixXcd gram_numeric(const PaleyMatrix& phi);

/// Closed-form Gram entry: chi(i - j)/sqrt(p) inside F_p, 1/sqrt(p) against
/// the appended column p, 1 on the diagonal.
double gram_analytic_entry(const LegendreTable& chi, std::uint32_t i, std::uint32_t j);

/// Closed-form Gram over all p + 1 columns.
Eigen::MatrixXd gram_analytic(const Prime1Mod4& p);

/// Closed-form Gram restricted to the given column indices (each in [0, p]).
Eigen::MatrixXd gram_analytic_submatrix(const LegendreTable& chi,
                                        std::span<const std::uint32_t> columns);

struct FrameReport {
    std::uint32_t p = 0;
    double max_offdiag_dev = 0.0; // max |gram_numeric - gram_analytic|
    double tight_dev = 0.0;       // max |Phi Phi^* - 2 I_M|
    double equiangular_dev = 0.0; // max_{i != j} ||G[i, j]| - 1/sqrt(p)|
    double max_imag = 0.0;        // max |Im G[i, j]|
    double max_norm_dev = 0.0;    // max |G[i, i] - 1|
};

FrameReport frame_check(const PaleyMatrix& phi);

/// CSV with header `row,col,re,im`, row-major, 17 significant digits.
void write_matrix_csv(std::ostream& out, const PaleyMatrix& phi);
/// CSV with header `i,j,re,im`, row-major, 17 significant digits.
void write_gram_csv(std::ostream& out, const Eigen::MatrixXcd& gram);

} // namespace paley
