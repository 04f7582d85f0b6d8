#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entroconv/certifier.hpp"
#include "entroconv/discrete.hpp"

namespace entroconv {

/// Spike family on [0,1]: n cells of height n^2 and width 1/n^3 starting at
/// k/n, k = 0..n-1. Mass 1, support measure 1/n^2; n = 1 degenerates to the
/// uniform density.
Density build_counterexample(int n);

/// Positive two-cell family (1 + 1/(2n) on [0, 1/2], 1 - 1/(2n) on [1/2, 1]):
/// log densities uniformly bounded over n, every convergence column vanishes.
Density build_two_cell(int n);

/// Uniform density of level lambda over the unbounded region
/// {(x1,x2) in R+^2 : x2 <= exp(-lambda x1)}; entropy is -log2(lambda).
Density build_nnfs_region(double lambda);

/// Analytic density 1/((x+e) ln^2(x+e)) on [0,inf): total mass 1 but the
/// entropy integrand is not absolutely integrable.
Density build_heavy_tail();

/// Closed forms attached to a named family. Each present form is validated
/// against the measures module at construction over `validation_n`.
struct GoldenForms {
    std::function<double(int)> entropy;
    std::function<double(int)> kl;               // member vs limit
    std::function<double(int)> variation;        // member vs limit
    std::function<double(int)> kolmogorov_bound; // upper bound, not equality
    double tol = 1e-12;
    std::vector<int> validation_n;
};

struct ContinuousScenario {
    std::string name;
    FamilySpec family;
    GoldenForms golden;
};

struct DiscreteScenario {
    std::string name;
    std::function<DiscretePmf(int)> member;
    DiscretePmf limit;
    DiscreteFamilyHints hints;
    std::optional<double> golden_limit_entropy;
};

struct ScenarioParams {
    double lambda = 1.0;    // nnfs-region level
    double parameter = 0.5; // base parameter of the drifting discrete families
};

bool is_discrete_scenario(const std::string& name);
std::vector<std::string> continuous_scenario_names();
std::vector<std::string> discrete_scenario_names();

/// Builds a named continuous scenario ("counterexample", "two-cell",
/// "constant", "nnfs-region", "heavy-tail") with its golden forms validated.
/// Throws ArgumentError for unknown names.
ContinuousScenario make_continuous_scenario(const std::string& name,
                                            const ScenarioParams& params = {});

/// Builds a named discrete scenario ("bernoulli-drift", "geometric-drift",
/// "finite-uniform-drift") with tail bounds and golden entropy attached.
DiscreteScenario make_discrete_scenario(const std::string& name,
                                        const ScenarioParams& params = {});

} // namespace entroconv
