#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "entroconv/cli_app.hpp"

namespace {

using entroconv::cli::CliOptions;

std::pair<int, int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("--n-range", "expected the form a..b");
    try {
        const int a = std::stoi(text.substr(0, pos));
        const int b = std::stoi(text.substr(pos + 2));
        return {a, b};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n-range", "expected integers in a..b");
    }
}

void add_common(CLI::App* cmd, CliOptions& opts, std::string& range_text) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--n", opts.n, "single family index n");
    cmd->add_option("--n-range", range_text, "inclusive index range a..b");
    cmd->add_option("--format", opts.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cmd->add_option("--out", opts.out_path, "write output to this path");
    cmd->add_option("--tol", opts.tol, "quadrature tolerance override");
    cmd->add_option("--seed", opts.seed, "probe-point seed (default 0)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"information measures and entropy-convergence certificates "
                 "for explicit densities and PMFs"};
    app.require_subcommand(1);

    CliOptions opts;
    std::string range_text;

    CLI::App* measure = app.add_subcommand("measure", "compute one quantity at one n");
    add_common(measure, opts, range_text);
    measure->add_option("--quantity", opts.quantity,
                        "entropy|kl|variation|kolmogorov (default entropy)");

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate quantities over an n range");
    add_common(sweep, opts, range_text);
    sweep->add_option("--quantity", opts.quantities,
                      "columns to compute (repeatable; default all)");

    CLI::App* certify =
        app.add_subcommand("certify", "run a convergence certificate over an n list");
    add_common(certify, opts, range_text);
    certify->add_option("--theorem", opts.theorem, "thm1|thm2|thm3|corollary|discrete");

    CLI::App* counterexample = app.add_subcommand(
        "counterexample", "sweep the spike family and compare against its closed forms");
    add_common(counterexample, opts, range_text);

    CLI::App* selftest = app.add_subcommand("selftest", "run the golden suite");
    add_common(selftest, opts, range_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : entroconv::cli::kExitUsage;
    }

    try {
        if (!range_text.empty()) opts.n_range = parse_range(range_text);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return entroconv::cli::kExitUsage;
    }

    if (measure->parsed()) return entroconv::cli::cmd_measure(opts, std::cout, std::cerr);
    if (sweep->parsed()) return entroconv::cli::cmd_sweep(opts, std::cout, std::cerr);
    if (certify->parsed()) return entroconv::cli::cmd_certify(opts, std::cout, std::cerr);
    if (counterexample->parsed())
        return entroconv::cli::cmd_counterexample(opts, std::cout, std::cerr);
    if (selftest->parsed()) return entroconv::cli::cmd_selftest(opts, std::cout, std::cerr);
    return entroconv::cli::kExitUsage;
}
