#include "paley/report_json.hpp"

namespace paley {

using nlohmann::json;

void to_json(json& j, const SupportPair& pair) { j = json{{"I", pair.I}, {"J", pair.J}}; }

void to_json(json& j, const DiscrepancyConditionReport& r) {
    j = json{{"p", r.p},
             {"alpha", r.alpha},
             {"beta", r.beta},
             {"mode", to_string(r.mode)},
             {"samples", r.samples},
             {"seed", r.seed},
             {"checked", r.checked},
             {"max_abs_sum", r.max_abs_sum},
             {"witness", r.witness},
             {"beta_hat", nullptr},
             {"holds", r.holds},
             {"violation_count", r.violations.size()},
             {"violations", r.violations},
             {"finite_evidence_only", r.finite_evidence_only}};
}

void to_json(json& j, const LemmaReport& r) {
    j = json{{"p", r.p},
             {"alpha", r.alpha},
             {"beta", r.beta},
             {"tau", r.tau},
             {"mode", "sampled"},
             {"samples", r.samples},
             {"seed", r.seed},
             {"max_size", r.max_size},
             {"worst_ratio", r.worst_ratio},
             {"witness", r.witness},
             {"holds", r.holds_on_sample},
             {"finite_evidence_only", r.finite_evidence_only}};
}

void to_json(json& j, const DiscrepancyReport& r) {
    j = json{{"p", r.p},
             {"subset_size", r.subset_size},
             {"samples", r.samples},
             {"seed", r.seed},
             {"max_abs_sum", r.max_abs_sum},
             {"witness", r.witness},
             {"beta_hat", r.beta_hat ? json(*r.beta_hat) : json(nullptr)},
             {"finite_evidence_only", true}};
}

void to_json(json& j, const FrameReport& r) {
    j = json{{"p", r.p},
             {"max_offdiag_dev", r.max_offdiag_dev},
             {"tight_dev", r.tight_dev},
             {"equiangular_dev", r.equiangular_dev},
             {"max_imag", r.max_imag},
             {"max_norm_dev", r.max_norm_dev}};
}

void to_json(json& j, const RipReport& r) {
    j = json{{"p", r.p},
             {"K", r.K},
             {"mode", to_string(r.mode)},
             {"delta", r.delta},
             {"witness", r.witness_support},
             {"checked", r.supports_checked},
             {"samples", r.samples},
             {"seed", r.seed}};
}

void to_json(json& j, const FlatRipReport& r) {
    j = json{{"p", r.p},
             {"K", r.K},
             {"mode", to_string(r.mode)},
             {"theta", r.theta},
             {"scaled_inner_product", r.scaled_inner_product},
             {"witness", r.witness},
             {"checked", r.pairs_checked},
             {"samples", r.samples},
             {"seed", r.seed}};
}

void to_json(json& j, const CliqueReport& r) {
    j = json{{"p", r.p},
             {"omega", r.omega},
             {"witness", r.witness_clique},
             {"independent_witness", r.independent_witness},
             {"nonresidue", r.nonresidue},
             {"nodes_explored", r.nodes_explored}};
}

void to_json(json& j, const CliqueRipConsistency& r) {
    j = json{{"p", r.p},         {"K", r.K},
             {"omega", r.omega}, {"delta", r.delta},
             {"exact_bound", r.exact_bound}, {"holds", r.holds},
             {"stated_bound", r.stated_bound}, {"stated_holds", r.stated_holds}};
}

void to_json(json& j, const IndependentGramSpectra& r) {
    j = json{{"analytic", std::vector<double>(r.analytic.begin(), r.analytic.end())},
             {"numeric", std::vector<double>(r.numeric.begin(), r.numeric.end())},
             {"max_abs_diff", r.max_abs_diff}};
}

void to_json(json& j, const TheoremParams& t) {
    j = json{{"alpha", t.alpha},
             {"beta", t.beta},
             {"gamma", t.gamma},
             {"epsilon", t.epsilon},
             {"beta_clamped", t.beta_clamped},
             {"beta_was_clamped", t.beta_was_clamped},
             {"case", to_string(t.proof_case)},
             {"gamma_star", t.gamma_star ? json(*t.gamma_star) : json(nullptr)},
             {"beta_star", t.beta_star ? json(*t.beta_star) : json(nullptr)},
             {"beta_effective", t.beta_effective},
             {"tau", t.tau},
             {"K_exponent", t.K_exponent},
             {"theta_exponent", t.theta_exponent},
             {"eta", t.eta}};
}

void to_json(json& j, const DeltaBound& d) {
    j = json{{"delta", d.delta}, {"target", d.target}, {"within_target", d.within_target}};
}

void from_json(const json& j, TheoremParams& t) {
    t = TheoremParams{};
    j.at("alpha").get_to(t.alpha);
    j.at("beta").get_to(t.beta);
    j.at("gamma").get_to(t.gamma);
    j.at("epsilon").get_to(t.epsilon);
}

} // namespace paley
