#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace paley {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Flags of one CLI invocation. Embedded in every report. The worker count is
/// deliberately absent: it never changes results.
struct RunConfig {
    std::string command;
    std::optional<std::uint64_t> p;
    std::optional<std::uint32_t> K;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
    std::optional<double> epsilon;
    std::optional<double> tau;
    std::string mode;
    std::uint64_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "json";
};

void to_json(nlohmann::json& j, const RunConfig& c);

struct SelftestResult {
    nlohmann::json report;
    bool passed = false;
};

/// Runs the invariant suite on p in {5, 13, 17}. Sampled checks draw from
/// `seed`; `workers` only affects speed.
SelftestResult run_selftest(std::uint64_t seed, unsigned workers);

} // namespace paley
