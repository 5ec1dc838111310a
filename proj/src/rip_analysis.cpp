#include "paley/rip_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "paley/combinatorics.hpp"
#include "paley/error.hpp"
#include "paley/parallel.hpp"
#include "paley/rng.hpp"

namespace paley {

namespace {

struct RipBest {
    double delta = -1.0;
    std::vector<std::uint32_t> support;
    std::uint64_t checked = 0;

    void offer(double d, const std::vector<std::uint32_t>& s) {
        if (d > delta || (d == delta && s < support)) {
            delta = d;
            support = s;
        }
    }
    void merge(const RipBest& other) {
        checked += other.checked;
        if (other.delta >= 0.0) offer(other.delta, other.support);
    }
};

// Flat-RIP candidate: |numer| / sqrt(|I| |J|), compared as exact rationals.
struct FlatBest {
    std::int64_t numer = -1; // signed scaled inner product; -1 sentinel via `empty`
    bool empty = true;
    SupportPair pair;
    std::uint64_t checked = 0;

    static bool greater(std::int64_t n1, std::size_t a1, std::size_t b1, std::int64_t n2,
                        std::size_t a2, std::size_t b2) {
        using wide = unsigned __int128;
        const wide lhs = wide(std::abs(n1)) * wide(std::abs(n1)) * a2 * b2;
        const wide rhs = wide(std::abs(n2)) * wide(std::abs(n2)) * a1 * b1;
        return lhs > rhs;
    }

    void offer(std::int64_t n, const SupportPair& candidate) {
        if (empty) {
            numer = n;
            pair = candidate;
            empty = false;
            return;
        }
        const auto a1 = candidate.I.size(), b1 = candidate.J.size();
        const auto a2 = pair.I.size(), b2 = pair.J.size();
        if (greater(n, a1, b1, numer, a2, b2) ||
            (!greater(numer, a2, b2, n, a1, b1) && candidate < pair)) {
            numer = n;
            pair = candidate;
        }
    }
    void merge(const FlatBest& other) {
        checked += other.checked;
        if (!other.empty) offer(other.numer, other.pair);
    }
};

void validate_sparsity(const Prime1Mod4& p, std::uint32_t K) {
    if (K < 1) throw ValidationError("sparsity K must be >= 1");
    if (K > p.value() + 1) throw ValidationError("sparsity K exceeds the number of columns p + 1");
}

double theta_of(std::int64_t numer, const SupportPair& pair, std::uint32_t p) {
    if (pair.J.empty()) return 0.0;
    const double sizes = static_cast<double>(pair.I.size()) * static_cast<double>(pair.J.size());
    return std::abs(static_cast<double>(numer)) / (std::sqrt(static_cast<double>(p)) * std::sqrt(sizes));
}

RipReport rip_report_from(const Prime1Mod4& p, std::uint32_t K, RipMode mode, RipBest best) {
    RipReport report;
    report.p = p.value();
    report.K = K;
    report.mode = mode;
    report.delta = std::max(best.delta, 0.0);
    report.witness_support = std::move(best.support);
    report.supports_checked = best.checked;
    return report;
}

FlatRipReport flat_report_from(const Prime1Mod4& p, std::uint32_t K, RipMode mode, FlatBest best) {
    FlatRipReport report;
    report.p = p.value();
    report.K = K;
    report.mode = mode;
    report.pairs_checked = best.checked;
    if (!best.empty) {
        report.scaled_inner_product = best.numer;
        report.theta = theta_of(best.numer, best.pair, p.value());
        report.witness = std::move(best.pair);
    }
    return report;
}

// One uniformly sampled flat-RIP pair in {0..p}: |I| uniform in [1, K], |J|
// uniform in [1, min(|I|, p + 1 - |I|)].
SupportPair sample_flat_pair(SplitMix64& rng, std::uint32_t columns, std::uint32_t K) {
    const std::uint32_t a_max = std::min(K, columns - 1);
    const auto a = 1 + static_cast<std::uint32_t>(uniform_below(rng, a_max));
    const auto b = 1 + static_cast<std::uint32_t>(uniform_below(rng, std::min(a, columns - a)));
    auto [I, J] = random_disjoint_pair(rng, columns, a, b);
    return SupportPair::make(columns, std::move(I), std::move(J));
}

} // namespace

HermitianEigen hermitian_eigs(const Eigen::MatrixXcd& g, double tol, bool with_vectors) {
    if (g.rows() != g.cols()) throw ValidationError("hermitian_eigs needs a square matrix");
    if (g.rows() > 0) {
        const double asym = (g - g.adjoint()).cwiseAbs().maxCoeff();
        if (asym > tol) {
            throw ValidationError("matrix is not Hermitian within tolerance (deviation " +
                                  std::to_string(asym) + ")");
        }
    }
    HermitianEigen result;
    if (g.rows() == 0) return result;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        g, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
    result.values = solver.eigenvalues();
    if (with_vectors) result.vectors = solver.eigenvectors();
    return result;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& g) {
    if (g.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
    return solver.eigenvalues();
}

std::string to_string(RipMode mode) { return mode == RipMode::Exact ? "exact" : "sampled"; }

double rip_deviation(const LegendreTable& chi, std::span<const std::uint32_t> support) {
    if (support.empty()) return 0.0;
    const Eigen::VectorXd eig = symmetric_eigenvalues(gram_analytic_submatrix(chi, support));
    return std::max(eig(eig.size() - 1) - 1.0, 1.0 - eig(0));
}

RipReport rip_constant_exact(const Prime1Mod4& p, std::uint32_t K, const EnumerationOptions& options) {
    validate_sparsity(p, K);
    const std::uint32_t columns = p.value() + 1;
    const std::uint64_t total = binomial(columns, K);
    if (total > options.cap) {
        throw CapExceeded("binom(" + std::to_string(columns) + ", " + std::to_string(K) +
                          ") supports exceed the enumeration cap " + std::to_string(options.cap) +
                          "; use sampled mode");
    }
    const LegendreTable chi(p);
    RipBest best = parallel_reduce(
        total, options.workers, RipBest{},
        [&](RipBest& st, std::uint64_t begin, std::uint64_t end) {
            if (begin == end) return;
            auto support = unrank_combination(columns, K, begin);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                st.offer(rip_deviation(chi, support), support);
                ++st.checked;
                next_combination(support, columns);
            }
        },
        [](RipBest& into, RipBest& from) { into.merge(from); });
    return rip_report_from(p, K, RipMode::Exact, std::move(best));
}

RipReport rip_constant_sampled(const Prime1Mod4& p, std::uint32_t K, std::uint64_t samples,
                               std::uint64_t seed, unsigned workers) {
    validate_sparsity(p, K);
    if (samples < 1) throw ValidationError("sampled mode needs samples >= 1");
    const std::uint32_t columns = p.value() + 1;
    const LegendreTable chi(p);
    RipBest best = parallel_reduce(
        samples, workers, RipBest{},
        [&](RipBest& st, std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t s = begin; s < end; ++s) {
                auto rng = sample_stream(seed, s);
                auto support = random_subset(rng, columns, K);
                std::sort(support.begin(), support.end());
                st.offer(rip_deviation(chi, support), support);
                ++st.checked;
            }
        },
        [](RipBest& into, RipBest& from) { into.merge(from); });
    auto report = rip_report_from(p, K, RipMode::Sampled, std::move(best));
    report.samples = samples;
    report.seed = seed;
    return report;
}

RipReport rip_constant_over(const Prime1Mod4& p, std::uint32_t K,
                            std::span<const std::vector<std::uint32_t>> supports) {
    validate_sparsity(p, K);
    const LegendreTable chi(p);
    RipBest best;
    for (auto support : supports) {
        std::sort(support.begin(), support.end());
        if (support.size() != K || std::adjacent_find(support.begin(), support.end()) != support.end() ||
            support.back() > p.value()) {
            throw ValidationError("each support must hold K distinct column indices in [0, p]");
        }
        best.offer(rip_deviation(chi, support), support);
        ++best.checked;
    }
    auto report = rip_report_from(p, K, RipMode::Sampled, std::move(best));
    report.samples = supports.size();
    return report;
}

std::int64_t scaled_flat_inner_product(const LegendreTable& chi, const SupportPair& pair) {
    const std::uint32_t extra = chi.p();
    std::int64_t total = 0;
    for (auto i : pair.I) {
        if (i > extra) throw ValidationError("column index out of range");
        for (auto j : pair.J) {
            if (j > extra) throw ValidationError("column index out of range");
            if (i == j) throw ValidationError("I and J must be disjoint");
            total += (i == extra || j == extra) ? 1 : chi.chi_diff(i, j);
        }
    }
    return total;
}

double flat_ratio(const LegendreTable& chi, const SupportPair& pair) {
    return theta_of(scaled_flat_inner_product(chi, pair), pair, chi.p());
}

std::complex<double> flat_inner_product(const PaleyMatrix& phi, const SupportPair& pair) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(phi.rows());
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(phi.rows());
    for (auto i : pair.I) u += phi.entries().col(i);
    for (auto j : pair.J) v += phi.entries().col(j);
    // <u, v> linear in the first argument.
    return v.dot(u);
}

FlatRipReport flat_rip_exact(const Prime1Mod4& p, std::uint32_t K, const EnumerationOptions& options) {
    validate_sparsity(p, K);
    const std::uint32_t columns = p.value() + 1;
    const std::uint32_t a_max = std::min(K, columns - 1);

    // Pairs are enumerated as (|I|, rank of I) blocks; J runs over the complement.
    std::vector<std::uint64_t> block_start{0};
    std::uint64_t total_pairs = 0;
    for (std::uint32_t a = 1; a <= a_max; ++a) {
        const std::uint64_t sets_i = binomial(columns, a);
        std::uint64_t sets_j = 0;
        for (std::uint32_t b = 1; b <= std::min(a, columns - a); ++b) sets_j += binomial(columns - a, b);
        const unsigned __int128 pairs = static_cast<unsigned __int128>(sets_i) * sets_j;
        if (pairs > options.cap || total_pairs + static_cast<std::uint64_t>(pairs) > options.cap) {
            throw CapExceeded("flat-RIP pair count for p = " + std::to_string(p.value()) +
                              ", K = " + std::to_string(K) + " exceeds the enumeration cap " +
                              std::to_string(options.cap) + "; use sampled mode");
        }
        total_pairs += static_cast<std::uint64_t>(pairs);
        block_start.push_back(block_start.back() + sets_i);
    }

    const LegendreTable chi(p);
    const std::uint32_t extra = p.value();
    auto gram_units = [&](std::uint32_t i, std::uint32_t j) -> std::int64_t {
        return (i == extra || j == extra) ? 1 : chi.chi_diff(i, j);
    };

    FlatBest best = parallel_reduce(
        block_start.back(), options.workers, FlatBest{},
        [&](FlatBest& st, std::uint64_t begin, std::uint64_t end) {
            std::vector<std::uint32_t> complement;
            std::vector<std::int64_t> row_sum;
            std::vector<std::uint32_t> positions;
            for (std::uint64_t index = begin; index < end; ++index) {
                const auto block = static_cast<std::uint32_t>(
                    std::upper_bound(block_start.begin(), block_start.end(), index) - block_start.begin());
                const std::uint32_t a = block;
                const auto I = unrank_combination(columns, a, index - block_start[block - 1]);

                complement.clear();
                row_sum.clear();
                for (std::uint32_t v = 0, k = 0; v < columns; ++v) {
                    if (k < a && I[k] == v) {
                        ++k;
                        continue;
                    }
                    complement.push_back(v);
                    std::int64_t s = 0;
                    for (auto i : I) s += gram_units(i, v);
                    row_sum.push_back(s);
                }
                const auto c = static_cast<std::uint32_t>(complement.size());
                for (std::uint32_t b = 1; b <= std::min(a, c); ++b) {
                    positions.resize(b);
                    for (std::uint32_t t = 0; t < b; ++t) positions[t] = t;
                    do {
                        std::int64_t numer = 0;
                        for (auto pos : positions) numer += row_sum[pos];
                        ++st.checked;
                        // Cheap reject before materializing the pair.
                        if (!st.empty && FlatBest::greater(st.numer, st.pair.I.size(), st.pair.J.size(),
                                                           numer, a, b)) {
                            continue;
                        }
                        std::vector<std::uint32_t> J(b);
                        for (std::uint32_t t = 0; t < b; ++t) J[t] = complement[positions[t]];
                        st.offer(numer, SupportPair{I, std::move(J)});
                    } while (next_combination(positions, c));
                }
            }
        },
        [](FlatBest& into, FlatBest& from) { into.merge(from); });
    return flat_report_from(p, K, RipMode::Exact, std::move(best));
}

FlatRipReport flat_rip_sampled(const Prime1Mod4& p, std::uint32_t K, std::uint64_t samples,
                               std::uint64_t seed, unsigned workers) {
    validate_sparsity(p, K);
    if (samples < 1) throw ValidationError("sampled mode needs samples >= 1");
    const std::uint32_t columns = p.value() + 1;
    const LegendreTable chi(p);
    FlatBest best = parallel_reduce(
        samples, workers, FlatBest{},
        [&](FlatBest& st, std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t s = begin; s < end; ++s) {
                auto rng = sample_stream(seed, s);
                auto pair = sample_flat_pair(rng, columns, K);
                st.offer(scaled_flat_inner_product(chi, pair), pair);
                ++st.checked;
            }
        },
        [](FlatBest& into, FlatBest& from) { into.merge(from); });
    auto report = flat_report_from(p, K, RipMode::Sampled, std::move(best));
    report.samples = samples;
    report.seed = seed;
    return report;
}

FlatRipReport flat_rip_over(const Prime1Mod4& p, std::uint32_t K, std::span<const SupportPair> pairs) {
    validate_sparsity(p, K);
    const LegendreTable chi(p);
    FlatBest best;
    for (const auto& given : pairs) {
        auto pair = SupportPair::make(p.value() + 1, given.I, given.J);
        if (pair.I.size() > K || pair.J.empty()) {
            throw ValidationError("flat-RIP pairs need 1 <= |J| <= |I| <= K");
        }
        best.offer(scaled_flat_inner_product(chi, pair), pair);
        ++best.checked;
    }
    auto report = flat_report_from(p, K, RipMode::Sampled, std::move(best));
    report.samples = pairs.size();
    return report;
}

double rip_from_flat(double theta, std::uint32_t K) {
    if (K < 2) throw ValidationError("rip_from_flat needs K >= 2 so that log K > 0");
    if (!(theta >= 0.0)) throw ValidationError("theta must be non-negative");
    return 150.0 * theta * std::log(static_cast<double>(K));
}

} // namespace paley
