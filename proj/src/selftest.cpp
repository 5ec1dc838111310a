#include "paley/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "paley/character_sums.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"
#include "paley/paley_matrix.hpp"
#include "paley/report_json.hpp"
#include "paley/rip_analysis.hpp"
#include "paley/rng.hpp"
#include "paley/theorem_engine.hpp"

namespace paley {

using nlohmann::json;

void to_json(json& j, const RunConfig& c) {
    auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    j = json{{"command", c.command}, {"p", opt(c.p)},         {"K", opt(c.K)},
             {"alpha", opt(c.alpha)}, {"beta", opt(c.beta)},   {"gamma", opt(c.gamma)},
             {"epsilon", opt(c.epsilon)}, {"tau", opt(c.tau)}, {"mode", c.mode},
             {"samples", c.samples},  {"seed", c.seed},        {"out", c.out},
             {"format", c.format}};
}

namespace {

class Checklist {
public:
    void record(std::string name, std::uint32_t p, bool ok, json detail = json::object()) {
        all_ok_ = all_ok_ && ok;
        checks_.push_back(json{{"name", std::move(name)}, {"p", p}, {"passed", ok}, {"detail", std::move(detail)}});
    }
    bool ok() const { return all_ok_; }
    json checks() const { return checks_; }

private:
    json checks_ = json::array();
    bool all_ok_ = true;
};

void check_field(Checklist& list, const Prime1Mod4& p) {
    const LegendreTable chi(p);
    const std::uint32_t n = p.value();
    std::int64_t sum = 0, positives = 0;
    bool multiplicative = true, even = true, euler = true;
    for (std::uint32_t x = 0; x < n; ++x) {
        sum += chi.chi(x);
        positives += chi.chi(x) == 1;
        even = even && chi.chi(x) == chi(-static_cast<std::int64_t>(x));
        euler = euler && chi.chi(x) == legendre(x, p);
        for (std::uint32_t y = 0; y < n; ++y) {
            multiplicative = multiplicative &&
                             chi.chi(static_cast<std::uint32_t>(std::uint64_t{x} * y % n)) == chi.chi(x) * chi.chi(y);
        }
    }
    list.record("legendre_table", n,
                sum == 0 && positives == (n - 1) / 2 && chi.residues().size() == (n + 1) / 2 &&
                    multiplicative && even && euler,
                json{{"sum", sum}, {"residues", chi.residues().size()}, {"multiplicative", multiplicative},
                     {"even", even}, {"euler_matches_table", euler}});

    double worst = 0.0;
    for (std::uint32_t c = 1; c < n; ++c) {
        worst = std::max(worst, std::abs(gauss_sum(c, p) - std::sqrt(static_cast<double>(n)) * chi.chi(c)));
    }
    list.record("gauss_sum_identity", n, worst <= 1e-9 * n, json{{"max_dev", worst}});
}

void check_matrix(Checklist& list, const Prime1Mod4& p) {
    const auto frame = frame_check(PaleyMatrix(p));
    list.record("gram_equivalence", p.value(), frame.max_offdiag_dev <= 1e-10 && frame.max_imag <= 1e-10, frame);
    list.record("tight_equiangular_frame", p.value(),
                frame.tight_dev <= 1e-9 && frame.equiangular_dev <= 1e-10 && frame.max_norm_dev <= 1e-12, frame);
}

std::vector<RipReport> check_rip(Checklist& list, const Prime1Mod4& p, std::uint64_t seed, unsigned workers) {
    const LegendreTable chi(p);
    const PaleyMatrix phi(p);
    const Eigen::MatrixXcd gram = gram_numeric(phi);
    const double s = 1.0 / std::sqrt(static_cast<double>(p.value()));
    std::vector<RipReport> exact;
    for (std::uint32_t K = 1; K <= 4; ++K) exact.push_back(rip_constant_exact(p, K, {.workers = workers}));

    bool monotone = true;
    double consistency = 0.0;
    for (std::size_t k = 0; k < exact.size(); ++k) {
        if (k > 0) monotone = monotone && exact[k].delta >= exact[k - 1].delta;
        const auto& w = exact[k].witness_support;
        Eigen::MatrixXcd sub(w.size(), w.size());
        for (std::size_t a = 0; a < w.size(); ++a) {
            for (std::size_t b = 0; b < w.size(); ++b) sub(a, b) = gram(w[a], w[b]);
        }
        const auto eig = hermitian_eigs(sub, 1e-9).values;
        const double numeric = std::max(eig(eig.size() - 1) - 1.0, 1.0 - eig(0));
        consistency = std::max(consistency, std::abs(numeric - exact[k].delta));
    }
    list.record("rip_exact", p.value(),
                exact[0].delta == 0.0 && std::abs(exact[1].delta - s) <= 1e-10 && monotone && consistency <= 1e-9,
                json{{"reports", exact}, {"monotone", monotone}, {"numeric_consistency", consistency}});

    const auto sampled = rip_constant_sampled(p, 3, 500, seed, workers);
    list.record("rip_sampled_lower_bound", p.value(), sampled.delta <= exact[2].delta + 1e-12, sampled);
    return exact;
}

void check_flat_rip(Checklist& list, const Prime1Mod4& p, const std::vector<RipReport>& exact,
                    unsigned workers) {
    const LegendreTable chi(p);
    const PaleyMatrix phi(p);
    json reports = json::array();
    bool ok = true;
    for (std::uint32_t K = 2; K <= 4; ++K) {
        const auto flat = flat_rip_exact(p, K, {.workers = workers});
        const double numeric = std::abs(flat_inner_product(phi, flat.witness)) /
                               std::sqrt(double(flat.witness.I.size() * flat.witness.J.size()));
        const double implied = rip_from_flat(flat.theta, K);
        ok = ok && std::abs(numeric - flat.theta) <= 1e-10 && exact[K - 1].delta <= implied;
        reports.push_back(json{{"flat", flat}, {"numeric_theta", numeric}, {"implied_delta", implied},
                               {"delta", exact[K - 1].delta}});
    }
    list.record("flat_rip_and_bridge", p.value(), ok, reports);
}

void check_sums(Checklist& list, const Prime1Mod4& p, std::uint64_t seed) {
    const LegendreTable chi(p);
    const std::uint32_t n = p.value();
    bool symmetric = true, edges = true, ceiling = true, parity = true;
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto rng = sample_stream(seed ^ 0x5EED5EEDULL, s);
        const auto total = 1 + static_cast<std::uint32_t>(uniform_below(rng, n));
        const auto a = (total + 1) / 2;
        auto [I, J] = random_disjoint_pair(rng, n, a, total - a);
        std::vector<std::uint32_t> drawn;
        std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(drawn));
        const auto pair = SupportPair::make(n, std::move(I), std::move(J));
        symmetric = symmetric && symmetrization_check(chi, pair);

        const std::int64_t d = discrepancy_sum(chi, drawn);
        const std::int64_t size = drawn.size();
        edges = edges && d == 4 * induced_edges(chi, drawn) - size * (size - 1);
        ceiling = ceiling && std::abs(static_cast<double>(d)) <= std::sqrt(double(n)) * size + 1e-9;
        parity = parity && d % 2 == 0;
    }
    list.record("character_sum_identities", n, symmetric && edges && ceiling && parity,
                json{{"symmetrization", symmetric}, {"edge_identity", edges}, {"spectral_ceiling", ceiling},
                     {"even", parity}});

    const auto full = verify_discrepancy_condition(p, 0.99, 1.0, {});
    list.record("discrepancy_full_field", n, full.holds && full.max_abs_sum == 0, full);
}

void check_clique(Checklist& list, const Prime1Mod4& p, const std::vector<RipReport>& exact) {
    const LegendreTable chi(p);
    const auto clique = clique_number_exact(p);
    const auto spectra = independent_gram_eigs(p, clique.independent_witness);
    const auto& rip = exact.at(clique.omega - 1);
    const auto consistency = clique_rip_consistency(clique, rip.K, rip.delta);
    const bool ok = is_clique(chi, clique.witness_clique) && is_independent(chi, clique.independent_witness) &&
                    clique.witness_clique.size() == clique.omega && spectra.max_abs_diff <= 1e-9 &&
                    consistency.holds;
    list.record("clique_pipeline", p.value(), ok,
                json{{"clique", clique}, {"spectra", spectra}, {"consistency", consistency}});
}

void check_theorem(Checklist& list) {
    struct Case {
        double alpha, beta, gamma, tau, k_exponent;
    };
    bool ok = true;
    json derived = json::array();
    for (const Case c : {Case{0.1, 0.5, 0.6, 0.45, 0.6}, Case{0.1, 0.5, 0.51, 0.3825, 0.51}}) {
        const auto t = derive_parameters({.alpha = c.alpha, .beta = c.beta, .gamma = c.gamma, .epsilon = 0.01});
        ok = ok && std::abs(t.tau - c.tau) <= 1e-12 && std::abs(t.K_exponent - c.k_exponent) <= 1e-12 &&
             t.proof_case == ProofCase::I;
        derived.push_back(t);
    }
    const auto two = derive_parameters({.alpha = 0.3, .beta = 1.0, .gamma = 0.6, .epsilon = 0.01});
    ok = ok && two.proof_case == ProofCase::II && two.tau < 0.5 && two.K_exponent >= two.gamma - 1e-12 &&
         select_case(two.alpha, *two.beta_star) == ProofCase::I;
    derived.push_back(two);
    list.record("theorem_engine", 0, ok, derived);
}

} // namespace

SelftestResult run_selftest(std::uint64_t seed, unsigned workers) {
    Checklist list;
    for (std::uint32_t value : {5u, 13u, 17u}) {
        const Prime1Mod4 p(value);
        check_field(list, p);
        check_matrix(list, p);
        const auto exact = check_rip(list, p, seed, workers);
        check_flat_rip(list, p, exact, workers);
        check_sums(list, p, seed);
        check_clique(list, p, exact);
    }
    check_theorem(list);

    SelftestResult result;
    result.passed = list.ok();
    RunConfig config;
    config.command = "selftest";
    config.seed = seed;
    result.report = json{{"config", config}, {"checks", list.checks()}, {"passed", result.passed}};
    return result;
}

} // namespace paley
