#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "paley/character_sums.hpp"
#include "paley/finite_field.hpp"

namespace paley {

/// Largest p accepted by the exact clique search.
inline constexpr std::uint32_t kMaxCliquePrime = 10000;

/// Paley graph on F_p: x ~ y iff chi(x - y) = 1. Adjacency is a dense bitset.
class PaleyGraph {
public:
    using Row = std::vector<std::uint64_t>;

    explicit PaleyGraph(const Prime1Mod4& p);

    std::uint32_t p() const { return table_.p(); }
    std::uint32_t vertex_count() const { return table_.p(); }
    const LegendreTable& table() const { return table_; }

    bool adjacent(std::uint32_t x, std::uint32_t y) const {
        return (rows_[x][y >> 6] >> (y & 63)) & 1U;
    }
    const Row& neighbors(std::uint32_t x) const { return rows_[x]; }
    std::uint32_t degree(std::uint32_t x) const;
    std::size_t words() const { return words_; }

private:
    LegendreTable table_;
    std::size_t words_;
    std::vector<Row> rows_;
};

PaleyGraph build_graph(const Prime1Mod4& p);

/// Edge list CSV `u,v` with u < v, lexicographic.
void write_edge_csv(std::ostream& out, const PaleyGraph& graph);

/// e(S): unordered pairs {a, b} in S with chi(a - b) = 1.
std::int64_t induced_edges(const LegendreTable& chi, std::span<const std::uint32_t> S);
std::int64_t induced_edges(const LegendreTable& chi, const Subset& S);

struct CliqueReport {
    std::uint32_t p = 0;
    std::uint32_t omega = 0;
    /// Lexicographically smallest maximum clique; always contains 0.
    std::vector<std::uint32_t> witness_clique;
    /// a * witness_clique mod p for the smallest non-residue a, sorted.
    std::vector<std::uint32_t> independent_witness;
    std::uint32_t nonresidue = 0;
    std::uint64_t nodes_explored = 0;
};

/// Exact clique number by branch and bound with greedy-coloring bounds.
/// Paley graphs are vertex-transitive, so the search is rooted at vertex 0.
/// Throws ValidationError above kMaxCliquePrime.
CliqueReport clique_number_exact(const Prime1Mod4& p);

bool is_clique(const LegendreTable& chi, std::span<const std::uint32_t> S);
bool is_independent(const LegendreTable& chi, std::span<const std::uint32_t> S);

struct IndependentGramSpectra {
    Eigen::VectorXd analytic; // ascending
    Eigen::VectorXd numeric;  // ascending
    double max_abs_diff = 0.0;
};

/// Spectrum of (1 + p^-1/2) I - p^-1/2 J on `independent` (closed form: one
/// eigenvalue 1 - (w - 1) p^-1/2 and w - 1 copies of 1 + p^-1/2) next to the
/// spectrum of the numerically built Gram submatrix on the same columns.
/// Throws ValidationError unless `independent` is an independent set.
IndependentGramSpectra independent_gram_eigs(const Prime1Mod4& p,
                                             std::span<const std::uint32_t> independent);

struct CliqueRipConsistency {
    std::uint32_t p = 0;
    std::uint32_t K = 0;
    std::uint32_t omega = 0;
    double delta = 0.0;
    /// omega <= delta sqrt(p) + 1, from the exact smallest eigenvalue.
    double exact_bound = 0.0;
    bool holds = false;
    /// omega <= delta sqrt(p), the bound in the smallest-eigenvalue-1 - omega/sqrt(p) form.
    double stated_bound = 0.0;
    bool stated_holds = false;
};

/// Checks 1 - (omega - 1)/sqrt(p) >= 1 - delta for a RIP constant delta at
/// sparsity K >= omega. Throws when K < omega.
CliqueRipConsistency clique_rip_consistency(const Prime1Mod4& p, std::uint32_t K, double delta);
CliqueRipConsistency clique_rip_consistency(const CliqueReport& clique, std::uint32_t K, double delta);

} // namespace paley
