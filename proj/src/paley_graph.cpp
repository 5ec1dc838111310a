#include "paley/paley_graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <string>

#include "paley/error.hpp"
#include "paley/paley_matrix.hpp"
#include "paley/rip_analysis.hpp"

namespace paley {

namespace {

using Bits = std::vector<std::uint64_t>;

void clear_bit(Bits& b, std::uint32_t v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

Bits intersect(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

// Tomita-style search: greedy coloring orders the candidates and bounds the
// clique that can still be built from them.
class CliqueSearch {
public:
    explicit CliqueSearch(const PaleyGraph& g) : g_(g) {}

    // Greedy coloring of `cand`: vertices in color-class order with the color
    // (1-based) of each. color[k] bounds the clique within order[0..k].
    void color_sort(const Bits& cand, std::vector<std::uint32_t>& order,
                    std::vector<std::uint32_t>& color) const {
        order.clear();
        color.clear();
        Bits uncolored = cand;
        std::uint32_t c = 0;
        while (any(uncolored)) {
            ++c;
            Bits avail = uncolored;
            for (std::size_t w = 0; w < avail.size(); ++w) {
                while (avail[w] != 0) {
                    const auto v = static_cast<std::uint32_t>(w * 64 + std::countr_zero(avail[w]));
                    clear_bit(avail, v);
                    clear_bit(uncolored, v);
                    order.push_back(v);
                    color.push_back(c);
                    const Bits& nb = g_.neighbors(v);
                    for (std::size_t x = w; x < avail.size(); ++x) avail[x] &= ~nb[x];
                }
            }
        }
    }

    // Size of the largest clique extending `current` inside `cand`.
    void maximize(Bits cand, std::vector<std::uint32_t>& current) {
        ++nodes_;
        std::vector<std::uint32_t> order, color;
        color_sort(cand, order, color);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current.size() + color[k] <= best_) return;
            const std::uint32_t v = order[k];
            current.push_back(v);
            Bits next = intersect(cand, g_.neighbors(v));
            if (!any(next)) {
                best_ = std::max<std::uint32_t>(best_, static_cast<std::uint32_t>(current.size()));
            } else {
                maximize(std::move(next), current);
            }
            current.pop_back();
            clear_bit(cand, v);
        }
    }

    // First clique of size `target` in lexicographic order, extending `current`
    // by vertices of `cand` (all larger than the last vertex of `current`).
    bool first_lex(const Bits& cand, std::vector<std::uint32_t>& current, std::uint32_t target) {
        ++nodes_;
        if (current.size() == target) return true;
        std::vector<std::uint32_t> order, color;
        color_sort(cand, order, color);
        const std::uint32_t bound = color.empty() ? 0 : color.back();
        if (current.size() + bound < target) return false;
        Bits rest = cand;
        for (std::size_t w = 0; w < rest.size(); ++w) {
            while (rest[w] != 0) {
                const auto v = static_cast<std::uint32_t>(w * 64 + std::countr_zero(rest[w]));
                clear_bit(rest, v);
                current.push_back(v);
                // rest now holds only vertices above v.
                if (first_lex(intersect(rest, g_.neighbors(v)), current, target)) return true;
                current.pop_back();
            }
        }
        return false;
    }

    std::uint32_t best_ = 1;
    std::uint64_t nodes_ = 0;

private:
    const PaleyGraph& g_;
};

} // namespace

PaleyGraph::PaleyGraph(const Prime1Mod4& p)
    : table_(p), words_((p.value() + 63) / 64), rows_(p.value(), Row(words_, 0)) {
    const std::uint32_t n = p.value();
    for (std::uint32_t x = 0; x < n; ++x) {
        for (auto r : table_.residues()) {
            if (r != 0) {
                const std::uint32_t y = (x + r) % n;
                rows_[x][y >> 6] |= std::uint64_t{1} << (y & 63);
            }
        }
    }
}

std::uint32_t PaleyGraph::degree(std::uint32_t x) const {
    std::uint32_t d = 0;
    for (auto w : rows_[x]) d += static_cast<std::uint32_t>(std::popcount(w));
    return d;
}

PaleyGraph build_graph(const Prime1Mod4& p) { return PaleyGraph(p); }

void write_edge_csv(std::ostream& out, const PaleyGraph& graph) {
    out << "u,v\n";
    for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
        for (std::uint32_t v = u + 1; v < graph.vertex_count(); ++v) {
            if (graph.adjacent(u, v)) out << u << ',' << v << '\n';
        }
    }
}

std::int64_t induced_edges(const LegendreTable& chi, std::span<const std::uint32_t> S) {
    std::int64_t edges = 0;
    for (std::size_t a = 0; a < S.size(); ++a) {
        for (std::size_t b = a + 1; b < S.size(); ++b) {
            if (chi.chi_diff(S[a], S[b]) == 1) ++edges;
        }
    }
    return edges;
}

std::int64_t induced_edges(const LegendreTable& chi, const Subset& S) { return induced_edges(chi, S.elems()); }

bool is_clique(const LegendreTable& chi, std::span<const std::uint32_t> S) {
    const auto n = static_cast<std::int64_t>(S.size());
    return induced_edges(chi, S) == n * (n - 1) / 2;
}

bool is_independent(const LegendreTable& chi, std::span<const std::uint32_t> S) {
    return induced_edges(chi, S) == 0;
}

CliqueReport clique_number_exact(const Prime1Mod4& p) {
    if (p.value() > kMaxCliquePrime) {
        throw ValidationError("exact clique search is capped at p <= " + std::to_string(kMaxCliquePrime));
    }
    const PaleyGraph graph(p);
    CliqueSearch search(graph);

    // Every maximum clique translates to one through 0.
    std::vector<std::uint32_t> current{0};
    search.maximize(graph.neighbors(0), current);
    const std::uint32_t omega = search.best_;

    // The lexicographically smallest maximum clique starts at 0 because
    // some maximum clique contains 0.
    current = {0};
    Bits above_zero = graph.neighbors(0);
    clear_bit(above_zero, 0);
    if (!search.first_lex(above_zero, current, omega)) {
        throw std::logic_error("clique search lost its own optimum");
    }

    CliqueReport report;
    report.p = p.value();
    report.omega = omega;
    report.witness_clique = current;
    report.nonresidue = graph.table().smallest_nonresidue();
    for (auto v : current) {
        report.independent_witness.push_back(
            static_cast<std::uint32_t>(std::uint64_t{v} * report.nonresidue % p.value()));
    }
    std::sort(report.independent_witness.begin(), report.independent_witness.end());
    report.nodes_explored = search.nodes_;
    return report;
}

IndependentGramSpectra independent_gram_eigs(const Prime1Mod4& p,
                                             std::span<const std::uint32_t> independent) {
    const LegendreTable chi(p);
    if (independent.empty()) throw ValidationError("independent_gram_eigs needs a nonempty independent set");
    for (auto v : independent) {
        if (v >= p.value()) throw ValidationError("independent set must lie in F_p");
    }
    if (!is_independent(chi, independent)) {
        throw ValidationError("supplied vertex set is not independent in the Paley graph");
    }
    const auto w = static_cast<Eigen::Index>(independent.size());
    const double s = 1.0 / std::sqrt(static_cast<double>(p.value()));

    IndependentGramSpectra out;
    out.analytic = Eigen::VectorXd::Constant(w, 1.0 + s);
    out.analytic(0) = 1.0 - static_cast<double>(w - 1) * s;

    const PaleyMatrix phi(p);
    const Eigen::MatrixXcd gram = gram_numeric(phi);
    Eigen::MatrixXcd sub(w, w);
    for (Eigen::Index a = 0; a < w; ++a) {
        for (Eigen::Index b = 0; b < w; ++b) sub(a, b) = gram(independent[a], independent[b]);
    }
    out.numeric = hermitian_eigs(sub, 1e-9).values;
    out.max_abs_diff = (out.analytic - out.numeric).cwiseAbs().maxCoeff();
    return out;
}

CliqueRipConsistency clique_rip_consistency(const CliqueReport& clique, std::uint32_t K, double delta) {
    if (K < clique.omega) {
        throw ValidationError("RIP sparsity K = " + std::to_string(K) + " is below omega = " +
                              std::to_string(clique.omega) + "; the bound does not apply");
    }
    if (!(delta >= 0.0)) throw ValidationError("delta must be non-negative");
    CliqueRipConsistency out;
    out.p = clique.p;
    out.K = K;
    out.omega = clique.omega;
    out.delta = delta;
    const double root_p = std::sqrt(static_cast<double>(clique.p));
    out.stated_bound = delta * root_p;
    out.exact_bound = out.stated_bound + 1.0;
    // Equality is the typical case (delta_omega is attained on the independent
    // set itself), so allow rounding in delta.
    constexpr double slack = 1e-9;
    out.holds = static_cast<double>(clique.omega) <= out.exact_bound + slack;
    out.stated_holds = static_cast<double>(clique.omega) <= out.stated_bound + slack;
    return out;
}

CliqueRipConsistency clique_rip_consistency(const Prime1Mod4& p, std::uint32_t K, double delta) {
    return clique_rip_consistency(clique_number_exact(p), K, delta);
}

} // namespace paley
