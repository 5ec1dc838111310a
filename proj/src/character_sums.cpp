#include "paley/character_sums.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "paley/error.hpp"
#include "paley/parallel.hpp"
#include "paley/rng.hpp"

namespace paley {

namespace {

void require_sorted_unique(std::vector<std::uint32_t>& v, std::uint32_t domain, const char* name) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw ValidationError(std::string(name) + " contains duplicate indices");
    }
    if (!v.empty() && v.back() >= domain) {
        throw ValidationError(std::string(name) + " has index " + std::to_string(v.back()) +
                              " outside [0, " + std::to_string(domain) + ")");
    }
}

void require_field_pair(const LegendreTable& chi, const SupportPair& pair) {
    for (const auto* side : {&pair.I, &pair.J}) {
        if (!side->empty() && side->back() >= chi.p()) {
            throw ValidationError("character sums need indices in F_p; got " +
                                  std::to_string(side->back()));
        }
    }
    std::vector<std::uint32_t> common;
    std::set_intersection(pair.I.begin(), pair.I.end(), pair.J.begin(), pair.J.end(),
                          std::back_inserter(common));
    if (!common.empty()) throw ValidationError("I and J must be disjoint");
}

std::vector<std::uint32_t> mask_elements(std::uint64_t mask) {
    std::vector<std::uint32_t> elems;
    for (std::uint32_t x = 0; mask != 0; ++x, mask >>= 1) {
        if (mask & 1) elems.push_back(x);
    }
    return elems;
}

// Running maximum of |D(S)| with the lexicographically smallest witness on ties.
struct MaxWitness {
    std::int64_t value = -1;
    std::vector<std::uint32_t> witness;

    void offer(std::int64_t v, const std::vector<std::uint32_t>& s) {
        if (v > value || (v == value && s < witness)) {
            value = v;
            witness = s;
        }
    }
    void merge(const MaxWitness& other) {
        if (other.value >= 0) offer(other.value, other.witness);
    }
};

struct ConditionState {
    MaxWitness best;
    std::uint64_t checked = 0;
    std::vector<std::vector<std::uint32_t>> violations;
};

} // namespace

Subset::Subset(std::uint32_t p, std::vector<std::uint32_t> elems) : p_(p), elems_(std::move(elems)) {
    require_sorted_unique(elems_, p_, "subset");
}

SupportPair SupportPair::make(std::uint32_t domain, std::vector<std::uint32_t> I,
                              std::vector<std::uint32_t> J) {
    require_sorted_unique(I, domain, "I");
    require_sorted_unique(J, domain, "J");
    std::vector<std::uint32_t> common;
    std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(common));
    if (!common.empty()) throw ValidationError("I and J must be disjoint");
    if (J.size() > I.size()) throw ValidationError("support pairs require |J| <= |I|");
    return SupportPair{std::move(I), std::move(J)};
}

std::string to_string(EnumerationMode mode) {
    return mode == EnumerationMode::Exhaustive ? "exhaustive" : "sampled";
}

std::complex<double> gauss_sum(std::int64_t c, const Prime1Mod4& p) {
    const std::uint64_t n = p.value();
    const std::uint64_t cr = p.reduce(c);
    if (cr == 0) throw ValidationError("gauss_sum requires c != 0 mod p");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::complex<double> total{0.0, 0.0};
    for (std::uint64_t y = 0; y < n; ++y) {
        const std::uint64_t k = (y * y % n) * cr % n;
        total += std::polar(1.0, -step * static_cast<double>(k));
    }
    return total;
}

std::int64_t discrepancy_sum(const LegendreTable& chi, std::span<const std::uint32_t> S) {
    std::int64_t total = 0;
    for (auto a : S) {
        for (auto b : S) total += chi.chi_diff(a, b);
    }
    return total;
}

std::int64_t discrepancy_sum(const LegendreTable& chi, const Subset& S) {
    return discrepancy_sum(chi, S.elems());
}

std::int64_t bilinear_sum(const LegendreTable& chi, const SupportPair& pair) {
    require_field_pair(chi, pair);
    std::int64_t total = 0;
    for (auto i : pair.I) {
        for (auto j : pair.J) total += chi.chi_diff(i, j);
    }
    return total;
}

bool symmetrization_check(const LegendreTable& chi, const SupportPair& pair) {
    require_field_pair(chi, pair);
    std::vector<std::uint32_t> joined;
    std::merge(pair.I.begin(), pair.I.end(), pair.J.begin(), pair.J.end(),
               std::back_inserter(joined));
    return discrepancy_sum(chi, joined) == discrepancy_sum(chi, pair.I) + discrepancy_sum(chi, pair.J) +
                      2 * bilinear_sum(chi, pair);
}

DiscrepancyConditionReport verify_discrepancy_condition(const Prime1Mod4& p, double alpha,
                                                        double beta,
                                                        const DiscrepancyOptions& options) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0, 1)");
    if (!(beta > 0.0 && beta <= 2.0)) throw ValidationError("beta must lie in (0, 2]");
    const std::uint32_t n = p.value();
    if (options.mode == EnumerationMode::Exhaustive && n > 25) {
        throw ValidationError("exhaustive discrepancy check needs p <= 25; use sampled mode");
    }
    if (options.mode == EnumerationMode::Sampled && options.samples < 1) {
        throw ValidationError("sampled mode needs samples >= 1");
    }
    const LegendreTable chi(p);
    const double size_floor = std::pow(static_cast<double>(n), alpha);
    const double exponent = 2.0 - beta;

    auto examine = [&](ConditionState& st, std::vector<std::uint32_t> s) {
        const double size = static_cast<double>(s.size());
        if (!(size > size_floor)) return;
        ++st.checked;
        const std::int64_t d = std::abs(discrepancy_sum(chi, s));
        // Strict inequality: equality is a violation.
        if (!(static_cast<double>(d) < std::pow(size, exponent))) st.violations.push_back(s);
        st.best.offer(d, s);
    };
    auto merge = [](ConditionState& into, ConditionState& from) {
        into.best.merge(from.best);
        into.checked += from.checked;
        into.violations.insert(into.violations.end(),
                               std::make_move_iterator(from.violations.begin()),
                               std::make_move_iterator(from.violations.end()));
    };

    ConditionState state;
    if (options.mode == EnumerationMode::Exhaustive) {
        state = parallel_reduce(
            std::uint64_t{1} << n, options.workers, ConditionState{},
            [&](ConditionState& st, std::uint64_t begin, std::uint64_t end) {
                for (std::uint64_t mask = begin; mask < end; ++mask) {
                    if (static_cast<double>(std::popcount(mask)) > size_floor) {
                        examine(st, mask_elements(mask));
                    }
                }
            },
            merge);
    } else {
        const auto smallest = static_cast<std::uint32_t>(std::floor(size_floor)) + 1;
        if (smallest <= n) {
            state = parallel_reduce(
                options.samples, options.workers, ConditionState{},
                [&](ConditionState& st, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t s = begin; s < end; ++s) {
                        auto rng = sample_stream(options.seed, s);
                        const auto size =
                            smallest + static_cast<std::uint32_t>(uniform_below(rng, n - smallest + 1));
                        auto subset = random_subset(rng, n, size);
                        std::sort(subset.begin(), subset.end());
                        examine(st, std::move(subset));
                    }
                },
                merge);
        }
    }

    std::sort(state.violations.begin(), state.violations.end());
    state.violations.erase(std::unique(state.violations.begin(), state.violations.end()),
                           state.violations.end());

    DiscrepancyConditionReport report;
    report.p = n;
    report.alpha = alpha;
    report.beta = beta;
    report.mode = options.mode;
    report.samples = options.mode == EnumerationMode::Sampled ? options.samples : 0;
    report.seed = options.mode == EnumerationMode::Sampled ? options.seed : 0;
    report.checked = state.checked;
    report.max_abs_sum = std::max<std::int64_t>(state.best.value, 0);
    report.witness = std::move(state.best.witness);
    report.violations = std::move(state.violations);
    report.holds = report.violations.empty();
    return report;
}

double lemma_ratio(const LegendreTable& chi, const SupportPair& pair, double tau) {
    if (pair.J.empty()) return 0.0;
    const double b = std::abs(static_cast<double>(bilinear_sum(chi, pair)));
    const double sizes = static_cast<double>(pair.I.size()) * static_cast<double>(pair.J.size());
    return b / (std::pow(static_cast<double>(chi.p()), tau) * std::sqrt(3.0 * sizes));
}

LemmaReport lemma_bound_check(const Prime1Mod4& p, double alpha, double beta, double tau,
                              std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
    if (!(beta > 0.0 && beta < 2.0)) throw ValidationError("beta must lie in (0, 2)");
    const double threshold = 2.0 * alpha / (2.0 - beta);
    if (tau < threshold) {
        throw ValidationError("tau must be at least 2 alpha / (2 - beta) = " +
                              std::to_string(threshold));
    }
    if (samples < 1) throw ValidationError("lemma check needs samples >= 1");

    const std::uint32_t n = p.value();
    const LegendreTable chi(p);
    const double bound = std::pow(static_cast<double>(n), 2.0 * tau / (2.0 - beta));
    const auto max_size =
        static_cast<std::uint32_t>(std::min<double>(std::floor(bound), static_cast<double>(n - 1)));

    struct State {
        double worst = -1.0;
        SupportPair witness;
    };
    auto offer = [](State& st, double r, const SupportPair& pair) {
        if (r > st.worst || (r == st.worst && pair < st.witness)) {
            st.worst = r;
            st.witness = pair;
        }
    };
    State result = parallel_reduce(
        samples, workers, State{},
        [&](State& st, std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t s = begin; s < end; ++s) {
                auto rng = sample_stream(seed, s);
                const auto a = 1 + static_cast<std::uint32_t>(uniform_below(rng, max_size));
                const auto b = 1 + static_cast<std::uint32_t>(uniform_below(rng, std::min(a, n - a)));
                auto [I, J] = random_disjoint_pair(rng, n, a, b);
                auto pair = SupportPair::make(n, std::move(I), std::move(J));
                offer(st, lemma_ratio(chi, pair, tau), pair);
            }
        },
        [&](State& into, State& from) {
            if (from.worst >= 0.0) offer(into, from.worst, from.witness);
        });

    LemmaReport report;
    report.p = n;
    report.alpha = alpha;
    report.beta = beta;
    report.tau = tau;
    report.samples = samples;
    report.seed = seed;
    report.max_size = max_size;
    report.worst_ratio = result.worst;
    report.witness = std::move(result.witness);
    report.holds_on_sample = report.worst_ratio <= 1.0;
    return report;
}

std::vector<DiscrepancyReport> estimate_beta(const Prime1Mod4& p,
                                             std::span<const std::uint32_t> sizes,
                                             std::uint64_t samples, std::uint64_t seed,
                                             unsigned workers) {
    const std::uint32_t n = p.value();
    for (auto size : sizes) {
        if (size < 2 || size > n) {
            throw ValidationError("subset sizes must lie in [2, p]; got " + std::to_string(size));
        }
    }
    if (samples < 1) throw ValidationError("estimate_beta needs samples >= 1");
    const LegendreTable chi(p);

    std::vector<DiscrepancyReport> reports;
    for (auto size : sizes) {
        MaxWitness best;
        if (size == n) {
            std::vector<std::uint32_t> all(n);
            for (std::uint32_t x = 0; x < n; ++x) all[x] = x;
            best.offer(std::abs(discrepancy_sum(chi, all)), all);
        } else {
            // Each size gets its own seed family so adding sizes never
            // perturbs the others.
            const std::uint64_t size_seed = seed ^ (std::uint64_t{size} << 40);
            best = parallel_reduce(
                samples, workers, MaxWitness{},
                [&](MaxWitness& st, std::uint64_t begin, std::uint64_t end) {
                    for (std::uint64_t s = begin; s < end; ++s) {
                        auto rng = sample_stream(size_seed, s);
                        auto subset = random_subset(rng, n, size);
                        std::sort(subset.begin(), subset.end());
                        st.offer(std::abs(discrepancy_sum(chi, subset)), subset);
                    }
                },
                [](MaxWitness& into, MaxWitness& from) { into.merge(from); });
        }
        DiscrepancyReport r;
        r.p = n;
        r.subset_size = size;
        r.samples = size == n ? 1 : samples;
        r.seed = seed;
        r.max_abs_sum = best.value;
        r.witness = std::move(best.witness);
        if (r.max_abs_sum > 1) {
            r.beta_hat = 2.0 - std::log(static_cast<double>(r.max_abs_sum)) /
                                   std::log(static_cast<double>(size));
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

} // namespace paley
