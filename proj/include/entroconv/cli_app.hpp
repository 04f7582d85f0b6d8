#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "entroconv/config.hpp"
#include "entroconv/report.hpp"

namespace entroconv::cli {

// exit codes shared by every subcommand
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotFinite = 2;       // diverged or budget-exceeded
inline constexpr int kExitHypothesisFailed = 3;
inline constexpr int kExitInconclusive = 4;

struct CliOptions {
    std::string config_path;
    std::optional<int> n;
    std::optional<std::pair<int, int>> n_range;
    std::vector<std::string> quantities;
    std::string quantity;
    std::string theorem;
    std::string format = "csv";
    std::string out_path;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
};

RunConfig effective_config(const CliOptions& opts);

/// Computes the sweep rows for a resolved scenario; `quantities` empty means
/// every column.
std::vector<SweepRecord> run_sweep(const ResolvedScenario& scenario,
                                   const std::vector<int>& n_values,
                                   const std::vector<std::string>& quantities,
                                   const RunConfig& cfg);

int cmd_measure(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_certify(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_counterexample(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_selftest(const CliOptions& opts, std::ostream& out, std::ostream& err);

} // namespace entroconv::cli
