#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "entroconv/density.hpp"
#include "entroconv/support.hpp"

namespace entroconv {

/// Scalar integrand with optional structure hints. `breakpoints` mark known
/// discontinuities or kinks and seed the initial subdivision. When
/// `piecewise_constant` is set the function must be constant on each open
/// cell between consecutive breakpoints and zero outside them, which lets
/// the engine integrate exactly by cell sums.
struct Integrand {
    std::function<double(double)> fn;
    std::vector<double> breakpoints;
    bool piecewise_constant = false;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
    bool exact = false;
};

struct QuadratureOptions {
    double tol = 1e-9;                  // absolute tolerance
    std::size_t max_intervals = 1'000'000;
    double divergence_cap = 1e6;         // cap on the running absolute integral
};

/// Integrate f against Lebesgue measure over the support, adaptively
/// subdividing with a nested Gauss-Kronrod 7/15 pair. Half-lines are mapped
/// to [0,1) through x = a +/- t/(1-t). Throws BudgetExceededError past the
/// subdivision cap and DivergenceError past the absolute-value cap, both
/// carrying the best running estimate.
QuadratureResult integrate_lebesgue(const Integrand& f, const SupportSpec& support,
                                    const QuadratureOptions& opts = {});

/// Integrate f against the measure with density d (that is, the Lebesgue
/// integral of f*d over d's support). Nodes where d vanishes contribute 0
/// regardless of f, realizing the 0*(+-inf) = 0 convention for integrands
/// like log-densities. Piecewise-constant d seeds subdivision with its
/// breakpoints; a piecewise-constant f against such a d is summed exactly.
QuadratureResult integrate_against(const Integrand& f, const Density& d,
                                   const QuadratureOptions& opts = {});

} // namespace entroconv
