#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paley/finite_field.hpp"

namespace paley {

/// Sorted, duplicate-free set of residues of F_p.
class Subset {
public:
    /// Sorts and validates; throws ValidationError on duplicates or elements >= p.
    Subset(std::uint32_t p, std::vector<std::uint32_t> elems);

    std::uint32_t p() const { return p_; }
    std::span<const std::uint32_t> elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> elems_;
};

/// Disjoint index sets with |J| <= |I|. `domain` is the exclusive upper bound
/// for indices: p for subsets of F_p, p + 1 when the appended column of the
/// Paley matrix may appear.
struct SupportPair {
    std::vector<std::uint32_t> I;
    std::vector<std::uint32_t> J;

    /// Sorts both sides and throws ValidationError unless they are disjoint,
    /// in range, duplicate-free and |J| <= |I|.
    static SupportPair make(std::uint32_t domain, std::vector<std::uint32_t> I,
                            std::vector<std::uint32_t> J);

    friend bool operator==(const SupportPair&, const SupportPair&) = default;
    /// Lexicographic on I, then J.
    friend bool operator<(const SupportPair& a, const SupportPair& b) {
        if (a.I != b.I) return a.I < b.I;
        return a.J < b.J;
    }
};

enum class EnumerationMode { Exhaustive, Sampled };
std::string to_string(EnumerationMode mode);

/// sum_{y=0}^{p-1} exp(-2 pi i y^2 c / p), direct summation. The phase index
/// y^2 c is reduced mod p before scaling by 2 pi / p.
std::complex<double> gauss_sum(std::int64_t c, const Prime1Mod4& p);

/// D(S) = sum over ordered pairs (a, b) in S x S of chi(a - b). Exact.
std::int64_t discrepancy_sum(const LegendreTable& chi, std::span<const std::uint32_t> S);
std::int64_t discrepancy_sum(const LegendreTable& chi, const Subset& S);

/// sum_{i in I, j in J} chi(i - j). Exact. Throws unless I and J are disjoint
/// subsets of F_p.
std::int64_t bilinear_sum(const LegendreTable& chi, const SupportPair& pair);

/// Checks D(I u J) = D(I) + D(J) + 2 B(I, J), which holds because chi is even.
bool symmetrization_check(const LegendreTable& chi, const SupportPair& pair);

struct DiscrepancyConditionReport {
    std::uint32_t p = 0;
    double alpha = 0.0;
    double beta = 0.0;
    EnumerationMode mode = EnumerationMode::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool holds = true;
    /// Subsets with |S| > p^alpha that were actually tested.
    std::uint64_t checked = 0;
    std::int64_t max_abs_sum = 0;
    std::vector<std::uint32_t> witness; // attains max_abs_sum among checked subsets
    std::vector<std::vector<std::uint32_t>> violations;
    /// Always true: a finite p says nothing about "every sufficiently large p".
    bool finite_evidence_only = true;
};

struct DiscrepancyOptions {
    EnumerationMode mode = EnumerationMode::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0xC0FFEE;
    unsigned workers = 0;
};

/// Tests |D(S)| < |S|^(2 - beta) on every S with |S| > p^alpha (exhaustive,
/// p <= 25) or on sampled S. Sampled mode draws |S| uniformly from the
/// admissible sizes, then S uniformly of that size.
DiscrepancyConditionReport verify_discrepancy_condition(const Prime1Mod4& p, double alpha,
                                                        double beta,
                                                        const DiscrepancyOptions& options);

struct LemmaReport {
    std::uint32_t p = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double tau = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Floor of p^(2 tau / (2 - beta)), capped at p - 1.
    std::uint32_t max_size = 0;
    bool holds_on_sample = true;
    double worst_ratio = 0.0;
    SupportPair witness;
    bool finite_evidence_only = true;
};

/// |B(I, J)| / (p^tau sqrt(3 |I| |J|)) for a single pair.
double lemma_ratio(const LegendreTable& chi, const SupportPair& pair, double tau);

/// Samples disjoint pairs with |J| <= |I| <= p^(2 tau / (2 - beta)) and
/// records the worst lemma ratio. Throws if tau < 2 alpha / (2 - beta).
LemmaReport lemma_bound_check(const Prime1Mod4& p, double alpha, double beta, double tau,
                              std::uint64_t samples, std::uint64_t seed, unsigned workers = 0);

struct DiscrepancyReport {
    std::uint32_t p = 0;
    std::uint32_t subset_size = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::int64_t max_abs_sum = 0;
    std::vector<std::uint32_t> witness;
    /// 2 - ln(max_abs_sum) / ln(subset_size); empty when max_abs_sum <= 1.
    std::optional<double> beta_hat;
};

/// Empirical exponent probe: for each size n, the largest |D(S)| over sampled
/// n-subsets. Size p has a single subset and is evaluated directly.
std::vector<DiscrepancyReport> estimate_beta(const Prime1Mod4& p,
                                             std::span<const std::uint32_t> sizes,
                                             std::uint64_t samples, std::uint64_t seed,
                                             unsigned workers = 0);

} // namespace paley
