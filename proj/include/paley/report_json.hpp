#pragma once

#include <json.hpp>

#include "paley/character_sums.hpp"
#include "paley/paley_graph.hpp"
#include "paley/paley_matrix.hpp"
#include "paley/rip_analysis.hpp"
#include "paley/theorem_engine.hpp"

namespace paley {

void to_json(nlohmann::json& j, const SupportPair& pair);
void to_json(nlohmann::json& j, const DiscrepancyConditionReport& r);
void to_json(nlohmann::json& j, const LemmaReport& r);
void to_json(nlohmann::json& j, const DiscrepancyReport& r);
void to_json(nlohmann::json& j, const FrameReport& r);
void to_json(nlohmann::json& j, const RipReport& r);
void to_json(nlohmann::json& j, const FlatRipReport& r);
void to_json(nlohmann::json& j, const CliqueReport& r);
void to_json(nlohmann::json& j, const CliqueRipConsistency& r);
void to_json(nlohmann::json& j, const IndependentGramSpectra& r);
void to_json(nlohmann::json& j, const TheoremParams& t);
void to_json(nlohmann::json& j, const DeltaBound& d);

/// Reads alpha, beta, gamma, epsilon; derived fields are ignored and
/// recomputed by derive_parameters.
void from_json(const nlohmann::json& j, TheoremParams& t);

} // namespace paley
