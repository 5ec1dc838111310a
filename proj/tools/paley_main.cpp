// paley: command-line front end for the Paley matrix toolkit.
//
// Exit codes: 0 success, 1 internal error or failed self-check, 2 invalid
// arguments.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paley/character_sums.hpp"
#include "paley/error.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"
#include "paley/paley_matrix.hpp"
#include "paley/report_json.hpp"
#include "paley/rip_analysis.hpp"
#include "paley/selftest.hpp"
#include "paley/theorem_engine.hpp"

namespace {

using nlohmann::json;
using namespace paley;

struct Flags {
    std::uint64_t p = 0;
    std::uint32_t k = 0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0, epsilon = 0.0, tau = 0.0;
    std::string mode;
    std::uint64_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t cap = 10'000'000;
    std::string out;
    std::string format = "json";
    std::string params_file;
    std::vector<std::uint32_t> sizes;
    unsigned threads = 0;
    bool analytic = false, numeric = false, compare = false;
    bool exact = false, sample = false;
    bool edges = false;
};

// Result of one command: either a JSON report or raw CSV text.
struct Output {
    json report;
    std::string csv;
    bool ok = true;
};

struct Context {
    Flags flags;
    RunConfig config;
    std::vector<CLI::Option*> p_opts, k_opts, alpha_opts, beta_opts, gamma_opts, epsilon_opts, tau_opts,
        samples_opts, mode_opts;

    static bool given(const std::vector<CLI::Option*>& opts) {
        for (auto* o : opts) {
            if (o->count() > 0) return true;
        }
        return false;
    }

    void finalize(const std::string& command) {
        config.command = command;
        if (given(p_opts)) config.p = flags.p;
        if (given(k_opts)) config.K = flags.k;
        if (given(alpha_opts)) config.alpha = flags.alpha;
        if (given(beta_opts)) config.beta = flags.beta;
        if (given(gamma_opts)) config.gamma = flags.gamma;
        if (given(epsilon_opts)) config.epsilon = flags.epsilon;
        if (given(tau_opts)) config.tau = flags.tau;
        config.mode = flags.mode;
        config.samples = flags.samples;
        config.seed = flags.seed;
        config.out = flags.out;
        config.format = flags.format;
    }
};

Prime1Mod4 require_p(const Context& ctx) {
    if (!ctx.config.p) throw ValidationError("--p is required");
    return Prime1Mod4(*ctx.config.p);
}

std::uint32_t require_k(const Context& ctx) {
    if (!ctx.config.K) throw ValidationError("--k is required");
    return *ctx.config.K;
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v) throw ValidationError(std::string(flag) + " is required");
    return *v;
}

Output cmd_build(const Context& ctx) {
    std::ostringstream csv;
    write_matrix_csv(csv, PaleyMatrix(require_p(ctx)));
    return {json(), csv.str()};
}

Output cmd_gram(const Context& ctx) {
    const auto p = require_p(ctx);
    const int chosen = ctx.flags.analytic + ctx.flags.numeric + ctx.flags.compare;
    if (chosen != 1) throw ValidationError("gram needs exactly one of --analytic, --numeric, --compare");
    if (ctx.flags.compare) {
        const auto frame = frame_check(PaleyMatrix(p));
        const bool ok = frame.max_offdiag_dev <= 1e-10;
        return {json{{"frame", frame}, {"tolerance", 1e-10}, {"holds", ok}}, {}, ok};
    }
    std::ostringstream csv;
    if (ctx.flags.numeric) {
        write_gram_csv(csv, gram_numeric(PaleyMatrix(p)));
    } else {
        write_gram_csv(csv, gram_analytic(p).cast<std::complex<double>>());
    }
    return {json(), csv.str()};
}

Output cmd_gauss(const Context& ctx) {
    const auto p = require_p(ctx);
    const LegendreTable chi(p);
    const double root = std::sqrt(static_cast<double>(p.value()));
    double worst = 0.0, worst_imag = 0.0;
    for (std::uint32_t c = 1; c < p.value(); ++c) {
        const auto g = gauss_sum(c, p);
        worst = std::max(worst, std::abs(g - root * chi.chi(c)));
        worst_imag = std::max(worst_imag, std::abs(g.imag()));
    }
    const double tol = 1e-9 * p.value();
    const bool ok = worst <= tol && worst_imag <= tol;
    return {json{{"p", p.value()}, {"max_dev", worst}, {"max_imag", worst_imag}, {"tolerance", tol}, {"holds", ok}},
            {},
            ok};
}

Output cmd_rip(const Context& ctx) {
    const auto p = require_p(ctx);
    const auto K = require_k(ctx);
    if (ctx.flags.exact == ctx.flags.sample) throw ValidationError("rip needs exactly one of --exact, --sample");
    const unsigned workers = ctx.flags.threads;
    const RipReport r = ctx.flags.exact
                            ? rip_constant_exact(p, K, {.cap = ctx.flags.cap, .workers = workers})
                            : rip_constant_sampled(p, K, ctx.flags.samples, ctx.flags.seed, workers);
    return {json(r)};
}

Output cmd_flat_rip(const Context& ctx) {
    const auto p = require_p(ctx);
    const auto K = require_k(ctx);
    if (ctx.flags.exact == ctx.flags.sample) throw ValidationError("flat-rip needs exactly one of --exact, --sample");
    const unsigned workers = ctx.flags.threads;
    const FlatRipReport r = ctx.flags.exact
                                ? flat_rip_exact(p, K, {.cap = ctx.flags.cap, .workers = workers})
                                : flat_rip_sampled(p, K, ctx.flags.samples, ctx.flags.seed, workers);
    json report = r;
    if (K >= 2) report["implied_rip_delta"] = rip_from_flat(r.theta, K);
    return {report};
}

Output cmd_discrepancy_verify(const Context& ctx) {
    const auto p = require_p(ctx);
    DiscrepancyOptions options;
    if (ctx.flags.mode == "exhaustive" || ctx.flags.mode.empty()) {
        options.mode = EnumerationMode::Exhaustive;
    } else if (ctx.flags.mode == "sampled") {
        options.mode = EnumerationMode::Sampled;
    } else {
        throw ValidationError("--mode must be exhaustive or sampled");
    }
    options.samples = ctx.flags.samples;
    options.seed = ctx.flags.seed;
    options.workers = ctx.flags.threads;
    return {json(verify_discrepancy_condition(p, require(ctx.config.alpha, "--alpha"),
                                              require(ctx.config.beta, "--beta"), options))};
}

Output cmd_discrepancy_estimate(const Context& ctx) {
    const auto p = require_p(ctx);
    if (ctx.flags.sizes.empty()) throw ValidationError("--sizes is required");
    const auto reports = estimate_beta(p, ctx.flags.sizes, ctx.flags.samples, ctx.flags.seed, ctx.flags.threads);
    return {json{{"p", p.value()}, {"mode", "sampled"}, {"seed", ctx.flags.seed}, {"estimates", reports}}};
}

Output cmd_lemma(const Context& ctx) {
    const auto p = require_p(ctx);
    return {json(lemma_bound_check(p, require(ctx.config.alpha, "--alpha"), require(ctx.config.beta, "--beta"),
                                   require(ctx.config.tau, "--tau"), ctx.flags.samples, ctx.flags.seed,
                                   ctx.flags.threads))};
}

Output cmd_clique(const Context& ctx) {
    const auto p = require_p(ctx);
    if (ctx.flags.edges) {
        std::ostringstream csv;
        write_edge_csv(csv, PaleyGraph(p));
        return {json(), csv.str()};
    }
    const auto clique = clique_number_exact(p);
    json report = clique;
    if (p.value() <= kMaxDensePrime) report["independent_gram"] = independent_gram_eigs(p, clique.independent_witness);
    if (ctx.config.K) {
        const auto rip = rip_constant_exact(p, *ctx.config.K, {.cap = ctx.flags.cap, .workers = ctx.flags.threads});
        report["rip"] = rip;
        report["consistency"] = clique_rip_consistency(clique, rip.K, rip.delta);
    }
    return {report};
}

Output cmd_theorem(const Context& ctx) {
    TheoremParams params;
    if (!ctx.flags.params_file.empty()) {
        std::ifstream in(ctx.flags.params_file);
        if (!in) throw ValidationError("cannot open " + ctx.flags.params_file);
        try {
            params = json::parse(in).get<TheoremParams>();
        } catch (const json::exception& e) {
            throw ValidationError(std::string("bad parameter file: ") + e.what());
        }
    }
    if (ctx.config.alpha) params.alpha = *ctx.config.alpha;
    if (ctx.config.beta) params.beta = *ctx.config.beta;
    if (ctx.config.gamma) params.gamma = *ctx.config.gamma;
    if (ctx.config.epsilon) params.epsilon = *ctx.config.epsilon;

    const auto interval = admissible_gamma(params.alpha, params.beta);
    const auto derived = derive_parameters(params);
    json report = derived;
    report["admissible_gamma"] = json{{"lo", interval.lo}, {"hi", interval.hi}};
    if (ctx.config.p) report["delta_bound"] = delta_bound(*ctx.config.p, derived);
    return {report};
}

Output cmd_selftest(const Context& ctx) {
    auto result = run_selftest(ctx.flags.seed, ctx.flags.threads);
    return {std::move(result.report), {}, result.passed};
}

void emit(const Context& ctx, Output& output) {
    std::string text;
    if (!output.csv.empty()) {
        text = output.csv;
    } else {
        output.report["config"] = ctx.config;
        text = output.report.dump(2) + "\n";
    }
    if (ctx.flags.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(ctx.flags.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + ctx.flags.out);
        file << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paley matrix toolkit: construction, Gram and frame checks, RIP and flat-RIP constants, "
                 "character sums, clique search, and theorem parameter arithmetic."};
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx;
    Flags& f = ctx.flags;

    app.add_option("--threads", f.threads, "Worker threads (default: PALEY_THREADS, else all cores)");
    app.add_option("--out", f.out, "Write the report here instead of stdout");
    app.add_option("--format", f.format, "Output format for reports")->check(CLI::IsMember({"json", "csv"}));

    auto add_p = [&](CLI::App* sub) { ctx.p_opts.push_back(sub->add_option("--p", f.p, "Prime p = 1 mod 4")); };
    auto add_k = [&](CLI::App* sub) { ctx.k_opts.push_back(sub->add_option("--k", f.k, "Sparsity level K")); };
    auto add_seeded = [&](CLI::App* sub) {
        ctx.samples_opts.push_back(sub->add_option("--samples", f.samples, "Number of random samples"));
        sub->add_option("--seed", f.seed, "PRNG seed (default 0xC0FFEE)");
    };
    const std::map<std::string, std::string> real_help = {
        {"--alpha", "Discrepancy exponent alpha"},
        {"--beta", "Discrepancy decay beta"},
        {"--gamma", "Sparsity exponent gamma (K = p^gamma)"},
        {"--epsilon", "Slack epsilon in the RIP exponent"},
        {"--tau", "Bilinear-sum exponent tau"},
    };
    auto add_real = [&](CLI::App* sub, const char* name, double& target, std::vector<CLI::Option*>& sink) {
        sink.push_back(sub->add_option(name, target, real_help.at(name)));
    };

    auto* build = app.add_subcommand("build", "Paley matrix as CSV (row,col,re,im)");
    add_p(build);

    auto* gram = app.add_subcommand("gram", "Gram matrix (CSV) or numeric-vs-analytic comparison (JSON)");
    add_p(gram);
    gram->add_flag("--analytic", f.analytic, "Closed-form Gram chi(i-j)/sqrt(p)");
    gram->add_flag("--numeric", f.numeric, "Gram of the built matrix");
    gram->add_flag("--compare", f.compare, "Maximum entrywise deviation between the two");

    auto* gauss = app.add_subcommand("gauss-check", "Quadratic Gauss sums against sqrt(p) chi(c)");
    add_p(gauss);

    auto* rip = app.add_subcommand("rip", "Restricted isometry constant delta_K");
    add_p(rip);
    add_k(rip);
    rip->add_flag("--exact", f.exact, "Enumerate every support");
    rip->add_flag("--sample", f.sample, "Lower bound from sampled supports");
    rip->add_option("--cap", f.cap, "Enumeration cap");
    add_seeded(rip);

    auto* flat = app.add_subcommand("flat-rip", "Flat-RIP constant theta_K");
    add_p(flat);
    add_k(flat);
    flat->add_flag("--exact", f.exact, "Enumerate every disjoint pair");
    flat->add_flag("--sample", f.sample, "Lower bound from sampled pairs");
    flat->add_option("--cap", f.cap, "Enumeration cap");
    add_seeded(flat);

    auto* disc = app.add_subcommand("discrepancy", "Discrepancy sums of the Legendre symbol");
    disc->require_subcommand(1);
    auto* verify = disc->add_subcommand("verify", "Check |D(S)| < |S|^(2-beta) for |S| > p^alpha");
    add_p(verify);
    add_real(verify, "--alpha", f.alpha, ctx.alpha_opts);
    add_real(verify, "--beta", f.beta, ctx.beta_opts);
    ctx.mode_opts.push_back(
        verify->add_option("--mode", f.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"})));
    add_seeded(verify);
    auto* estimate = disc->add_subcommand("estimate", "Empirical exponent beta_hat per subset size");
    add_p(estimate);
    estimate->add_option("--sizes", f.sizes, "Subset sizes")->delimiter(',');
    add_seeded(estimate);

    auto* lemma = app.add_subcommand("lemma-check", "Sampled bilinear-sum bound p^tau sqrt(3|I||J|)");
    add_p(lemma);
    add_real(lemma, "--alpha", f.alpha, ctx.alpha_opts);
    add_real(lemma, "--beta", f.beta, ctx.beta_opts);
    add_real(lemma, "--tau", f.tau, ctx.tau_opts);
    add_seeded(lemma);

    auto* clique = app.add_subcommand("clique", "Exact clique number and independent-set Gram spectrum");
    add_p(clique);
    add_k(clique);
    clique->add_flag("--edges", f.edges, "Emit the edge list as CSV (u,v) instead");
    clique->add_option("--cap", f.cap, "Enumeration cap for the --k RIP computation");

    auto* theorem = app.add_subcommand("theorem", "Parameter arithmetic of the discrepancy => RIP argument");
    add_real(theorem, "--alpha", f.alpha, ctx.alpha_opts);
    add_real(theorem, "--beta", f.beta, ctx.beta_opts);
    add_real(theorem, "--gamma", f.gamma, ctx.gamma_opts);
    add_real(theorem, "--epsilon", f.epsilon, ctx.epsilon_opts);
    add_p(theorem);
    theorem->add_option("--params", f.params_file, "JSON file with alpha, beta, gamma, epsilon");

    auto* selftest = app.add_subcommand("selftest", "Invariant suite on p in {5, 13, 17}");
    selftest->add_option("--seed", f.seed, "PRNG seed (default 0xC0FFEE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        Output output;
        std::string name;
        if (build->parsed()) {
            name = "build";
        } else if (gram->parsed()) {
            name = "gram";
        } else if (gauss->parsed()) {
            name = "gauss-check";
        } else if (rip->parsed()) {
            name = "rip";
        } else if (flat->parsed()) {
            name = "flat-rip";
        } else if (verify->parsed()) {
            name = "discrepancy verify";
        } else if (estimate->parsed()) {
            name = "discrepancy estimate";
        } else if (lemma->parsed()) {
            name = "lemma-check";
        } else if (clique->parsed()) {
            name = "clique";
        } else if (theorem->parsed()) {
            name = "theorem";
        } else {
            name = "selftest";
        }
        ctx.finalize(name);

        if (name == "build") output = cmd_build(ctx);
        else if (name == "gram") output = cmd_gram(ctx);
        else if (name == "gauss-check") output = cmd_gauss(ctx);
        else if (name == "rip") output = cmd_rip(ctx);
        else if (name == "flat-rip") output = cmd_flat_rip(ctx);
        else if (name == "discrepancy verify") output = cmd_discrepancy_verify(ctx);
        else if (name == "discrepancy estimate") output = cmd_discrepancy_estimate(ctx);
        else if (name == "lemma-check") output = cmd_lemma(ctx);
        else if (name == "clique") output = cmd_clique(ctx);
        else if (name == "theorem") output = cmd_theorem(ctx);
        else output = cmd_selftest(ctx);

        emit(ctx, output);
        return output.ok ? 0 : 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
