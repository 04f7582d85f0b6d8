#include "entroconv/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entroconv/errors.hpp"

namespace entroconv {

namespace {

constexpr double kE = 2.718281828459045;

void validate_golden(const ContinuousScenario& s) {
    const MeasureOptions opts;
    for (int n : s.golden.validation_n) {
        const Density member = s.family.member(n);
        std::ostringstream os;
        os << "scenario '" << s.name << "' golden mismatch at n=" << n << ": ";
        if (s.golden.entropy) {
            const double got = differential_entropy(member, opts).value;
            const double want = s.golden.entropy(n);
            if (std::fabs(got - want) > s.golden.tol) {
                os << "entropy " << got << " vs " << want;
                throw ConstructionError(os.str());
            }
        }
        if (s.golden.kl) {
            const double got = kl_divergence(member, s.family.limit, opts).value;
            const double want = s.golden.kl(n);
            if (std::fabs(got - want) > s.golden.tol) {
                os << "kl " << got << " vs " << want;
                throw ConstructionError(os.str());
            }
        }
        if (s.golden.variation) {
            const double got = variation_distance(member, s.family.limit, opts).value;
            const double want = s.golden.variation(n);
            if (std::fabs(got - want) > s.golden.tol) {
                os << "variation " << got << " vs " << want;
                throw ConstructionError(os.str());
            }
        }
        if (s.golden.kolmogorov_bound) {
            const double got = kolmogorov_distance(member, s.family.limit, opts).value;
            const double bound = s.golden.kolmogorov_bound(n);
            if (got > bound + s.golden.tol) {
                os << "kolmogorov " << got << " above bound " << bound;
                throw ConstructionError(os.str());
            }
        }
    }
}

Density uniform_01() { return Density::piecewise_constant({0.0, 1.0}, {1.0}); }

} // namespace

Density build_counterexample(int n) {
    if (n < 1 || n > 100'000)
        throw ArgumentError("counterexample index must lie in [1, 1e5]");
    if (n == 1) return uniform_01(); // the k=0 cell is exactly (0,1)

    const double nd = static_cast<double>(n);
    const double n2 = nd * nd;
    const double n3 = n2 * nd; // exact below 2^53 for n <= 1e5
    std::vector<double> breakpoints;
    std::vector<double> values;
    breakpoints.reserve(2 * static_cast<std::size_t>(n) + 1);
    values.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        // cell edges as integer numerators over n^3 to keep them sharp
        const double start = static_cast<double>(k) * n2 / n3;
        const double end = (static_cast<double>(k) * n2 + 1.0) / n3;
        breakpoints.push_back(start);
        breakpoints.push_back(end);
        values.push_back(n2);
        values.push_back(0.0);
    }
    breakpoints.push_back(1.0);
    return Density::piecewise_constant(std::move(breakpoints), std::move(values));
}

Density build_two_cell(int n) {
    if (n < 1)
        throw ArgumentError("two-cell index must be positive");
    const double eps = 1.0 / (2.0 * static_cast<double>(n));
    return Density::piecewise_constant({0.0, 0.5, 1.0}, {1.0 + eps, 1.0 - eps});
}

Density build_nnfs_region(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ArgumentError("region level must be positive and finite");
    SupportSpec region = SupportSpec::plane_region(
        [lambda](double x1, double x2) {
            return x1 >= 0.0 && x2 >= 0.0 && x2 <= std::exp(-lambda * x1);
        },
        SupportSpec::half_line(0.0),
        [lambda](double x1) { return x1 >= 0.0 ? std::exp(-lambda * x1) : 0.0; });
    return Density::region_uniform(std::move(region), lambda);
}

Density build_heavy_tail() {
    // integral of 1/((x+e) ln^2(x+e)) over [0,inf) is exactly 1; the mass
    // check is skipped because its quadrature tail converges only like 1/ln x
    return Density::analytic(
        SupportSpec::half_line(0.0),
        [](double x) {
            const double s = x + kE;
            const double l = std::log(s);
            return 1.0 / (s * l * l);
        },
        /*strictly_positive=*/true, std::nullopt, std::nullopt, 1e-9,
        /*skip_mass_check=*/true);
}

bool is_discrete_scenario(const std::string& name) {
    const auto names = discrete_scenario_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> continuous_scenario_names() {
    return {"counterexample", "two-cell", "constant", "nnfs-region", "heavy-tail"};
}

std::vector<std::string> discrete_scenario_names() {
    return {"bernoulli-drift", "geometric-drift", "finite-uniform-drift"};
}

ContinuousScenario make_continuous_scenario(const std::string& name,
                                            const ScenarioParams& params) {
    GoldenForms golden;
    FamilySpec family{uniform_01(), {}, {}, {}, {}, {}};

    if (name == "counterexample") {
        family.member = [](int n) { return build_counterexample(n); };
        family.limit_log_density_sup = 0.0;
        golden.entropy = [](int n) { return -2.0 * std::log2(static_cast<double>(n)); };
        golden.kl = [](int n) { return 2.0 * std::log2(static_cast<double>(n)); };
        golden.variation = [](int n) {
            const double n2 = static_cast<double>(n) * static_cast<double>(n);
            return 2.0 * (1.0 - 1.0 / n2);
        };
        golden.kolmogorov_bound = [](int n) {
            const double nd = static_cast<double>(n);
            return (1.0 / nd) * (1.0 - 1.0 / (nd * nd));
        };
        golden.validation_n = {1, 2, 3, 4, 8, 16, 32};
    } else if (name == "two-cell") {
        family.member = [](int n) { return build_two_cell(n); };
        family.member_log_density_sup = 1.0; // attained by the n=1 cell value 1/2
        family.limit_log_density_sup = 0.0;
        family.ratio_sup = 1.5;
        auto entropy = [](int n) {
            const double eps = 1.0 / (2.0 * static_cast<double>(n));
            const double hi = 1.0 + eps, lo = 1.0 - eps;
            return -0.5 * (hi * std::log2(hi) + lo * std::log2(lo));
        };
        golden.entropy = entropy;
        golden.kl = [entropy](int n) { return -entropy(n); }; // limit is uniform
        golden.variation = [](int n) { return 1.0 / (2.0 * static_cast<double>(n)); };
        golden.kolmogorov_bound = [](int n) { return 1.0 / (4.0 * static_cast<double>(n)); };
        golden.validation_n = {1, 2, 3, 4, 8, 64};
    } else if (name == "constant") {
        family.member = [](int) { return uniform_01(); };
        family.member_log_density_sup = 0.0;
        family.limit_log_density_sup = 0.0;
        family.ratio_sup = 1.0;
        golden.entropy = [](int) { return 0.0; };
        golden.kl = [](int) { return 0.0; };
        golden.variation = [](int) { return 0.0; };
        golden.validation_n = {1, 7};
    } else if (name == "nnfs-region") {
        const double lambda = params.lambda;
        family.limit = build_nnfs_region(lambda);
        family.member = [lambda](int) { return build_nnfs_region(lambda); };
        golden.entropy = [lambda](int) { return -std::log2(lambda); };
        golden.validation_n = {1};
    } else if (name == "heavy-tail") {
        family.limit = build_heavy_tail();
        family.member = [](int) { return build_heavy_tail(); };
        // no golden forms: the entropy integral has no finite value
    } else {
        throw ArgumentError("unknown continuous scenario '" + name + "'");
    }

    ContinuousScenario s{name, std::move(family), std::move(golden)};
    validate_golden(s);
    return s;
}

DiscreteScenario make_discrete_scenario(const std::string& name,
                                        const ScenarioParams& params) {
    const double base = params.parameter;
    if (!(base > 0.0 && base < 1.0))
        throw ArgumentError("discrete scenario parameter must lie in (0,1)");

    std::function<DiscretePmf(int)> member;
    std::optional<DiscretePmf> limit;
    DiscreteFamilyHints hints;
    std::optional<double> golden_entropy;

    if (name == "bernoulli-drift") {
        if (base + 0.25 >= 1.0)
            throw ArgumentError("bernoulli-drift base parameter must keep p + 1/4 below 1");
        limit = DiscretePmf::bernoulli(base);
        member = [base](int n) {
            return DiscretePmf::bernoulli(base + 1.0 / (4.0 * static_cast<double>(n)));
        };
        if (base == 0.5) golden_entropy = 1.0;
    } else if (name == "geometric-drift") {
        if (base + 0.25 >= 1.0)
            throw ArgumentError("geometric-drift base parameter must keep theta + 1/4 below 1");
        limit = DiscretePmf::geometric(base);
        member = [base](int n) {
            return DiscretePmf::geometric(base + 1.0 / (4.0 * static_cast<double>(n)));
        };
        hints.worst_ratio_index = 1; // the drifted parameter exceeds the base one
        if (base == 0.5) golden_entropy = 2.0;
    } else if (name == "finite-uniform-drift") {
        limit = DiscretePmf::finite({0.25, 0.25, 0.25, 0.25});
        member = [](int n) {
            const double d = 1.0 / (8.0 * static_cast<double>(n));
            return DiscretePmf::finite({0.25 + d, 0.25 - d, 0.25 + d, 0.25 - d});
        };
        golden_entropy = 2.0;
    } else {
        throw ArgumentError("unknown discrete scenario '" + name + "'");
    }

    if (golden_entropy) {
        const double got = discrete_entropy(*limit).value;
        if (std::fabs(got - *golden_entropy) > 1e-9) {
            std::ostringstream os;
            os << "scenario '" << name << "' limit entropy " << got << " vs golden "
               << *golden_entropy;
            throw ConstructionError(os.str());
        }
    }
    return DiscreteScenario{name, std::move(member), std::move(*limit), hints, golden_entropy};
}

} // namespace entroconv
