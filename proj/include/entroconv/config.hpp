#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entroconv/scenarios.hpp"

namespace entroconv {

struct InlineDensity {
    std::vector<double> breakpoints;
    std::vector<double> values;
};

struct ScenarioConfig {
    std::string name; // empty when an inline density is given
    ScenarioParams params;
    std::optional<InlineDensity> density;   // inline member
    std::optional<InlineDensity> reference; // inline limit; defaults to uniform
};

struct ToleranceConfig {
    double tol = 1e-9;
    double eps = 1e-10; // discrete truncation budget
    double divergence_cap = 1e6;
    double convergence_threshold = 1e-3;
    std::size_t max_intervals = 1'000'000;
};

struct SweepConfig {
    std::vector<int> n_values;
    std::vector<std::string> quantities;
    bool quantities_given = false; // an explicitly empty list is a usage error
};

struct CertifyConfig {
    std::string theorem;
    std::vector<int> n_list;
};

struct RunConfig {
    ScenarioConfig scenario;
    ToleranceConfig tolerances;
    SweepConfig sweep;
    CertifyConfig certify;
    std::uint64_t seed = 0;
};

/// Parses the JSON config document (sections scenario / tolerances / sweep /
/// certify / seed, all optional; scenario defaults to "counterexample").
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

/// Either a continuous or a discrete scenario, resolved from a config.
struct ResolvedScenario {
    std::optional<ContinuousScenario> continuous;
    std::optional<DiscreteScenario> discrete;
    bool is_discrete() const { return discrete.has_value(); }
};

ResolvedScenario resolve_scenario(const ScenarioConfig& sc);

MeasureOptions measure_options(const RunConfig& cfg);
DiscreteOptions discrete_options(const RunConfig& cfg);
CertifyOptions certify_options(const RunConfig& cfg);

} // namespace entroconv
