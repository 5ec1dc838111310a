#include "paley/paley_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "paley/error.hpp"

namespace paley {

namespace {

void write_number(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

void write_complex_csv(std::ostream& out, const char* header, const Eigen::MatrixXcd& m) {
    out << header << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << r << ',' << c << ',';
            write_number(out, m(r, c).real());
            out << ',';
            write_number(out, m(r, c).imag());
            out << '\n';
        }
    }
}

} // namespace

PaleyMatrix::PaleyMatrix(const Prime1Mod4& p) : p_(p) {
    const std::uint64_t n = p.value();
    if (n > kMaxDensePrime) {
        throw ValidationError("dense Paley matrix is capped at p <= " +
                              std::to_string(kMaxDensePrime) +
                              "; the analytic Gram is available at any p");
    }
    const auto rows = static_cast<Eigen::Index>((n + 1) / 2);
    const auto cols = static_cast<Eigen::Index>(n + 1);
    entries_ = Eigen::MatrixXcd::Zero(rows, cols);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double scale = r == 0 ? first_row_scale() : other_row_scale();
        const std::uint64_t freq = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(r) % n;
        for (std::uint64_t j = 0; j < n; ++j) {
            // Reduce the phase index before scaling so the angle stays in [0, 2 pi).
            const std::uint64_t k = freq * j % n;
            entries_(r, static_cast<Eigen::Index>(j)) =
                std::polar(scale, -step * static_cast<double>(k));
        }
    }
    entries_(0, cols - 1) = 1.0;
}

PaleyMatrix build(const Prime1Mod4& p) { return PaleyMatrix(p); }

Eigen::MatrixXcd gram_numeric(const PaleyMatrix& phi) {
    const Eigen::MatrixXcd& a = phi.entries();
    return a.transpose() * a.conjugate();
}

double gram_analytic_entry(const LegendreTable& chi, std::uint32_t i, std::uint32_t j) {
    if (i == j) return 1.0;
    const double inv_sqrt_p = 1.0 / std::sqrt(static_cast<double>(chi.p()));
    // The appended column e_1 meets the constant first row sqrt(1/p).
    if (i == chi.p() || j == chi.p()) return inv_sqrt_p;
    return chi.chi_diff(i, j) * inv_sqrt_p;
}

Eigen::MatrixXd gram_analytic(const Prime1Mod4& p) {
    const LegendreTable chi(p);
    const std::uint32_t n = p.value() + 1;
    Eigen::MatrixXd g(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) g(i, j) = gram_analytic_entry(chi, i, j);
    }
    return g;
}

Eigen::MatrixXd gram_analytic_submatrix(const LegendreTable& chi,
                                        std::span<const std::uint32_t> columns) {
    const auto k = static_cast<Eigen::Index>(columns.size());
    Eigen::MatrixXd g(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) g(a, b) = gram_analytic_entry(chi, columns[a], columns[b]);
    }
    return g;
}

FrameReport frame_check(const PaleyMatrix& phi) {
    FrameReport report;
    report.p = phi.p();
    const Eigen::MatrixXcd g = gram_numeric(phi);
    const Eigen::MatrixXd analytic = gram_analytic(phi.prime());
    const double target = 1.0 / std::sqrt(static_cast<double>(phi.p()));

    report.max_offdiag_dev = (g - analytic.cast<std::complex<double>>()).cwiseAbs().maxCoeff();
    report.max_imag = g.imag().cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        report.max_norm_dev = std::max(report.max_norm_dev, std::abs(g(i, i) - 1.0));
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            if (i != j) {
                report.equiangular_dev =
                    std::max(report.equiangular_dev, std::abs(std::abs(g(i, j)) - target));
            }
        }
    }
    const Eigen::MatrixXcd frame = phi.entries() * phi.entries().adjoint();
    const Eigen::MatrixXcd twice_identity =
        2.0 * Eigen::MatrixXcd::Identity(frame.rows(), frame.cols());
    report.tight_dev = (frame - twice_identity).cwiseAbs().maxCoeff();
    return report;
}

void write_matrix_csv(std::ostream& out, const PaleyMatrix& phi) {
    write_complex_csv(out, "row,col,re,im", phi.entries());
}

void write_gram_csv(std::ostream& out, const Eigen::MatrixXcd& gram) {
    write_complex_csv(out, "i,j,re,im", gram);
}

} // namespace paley
