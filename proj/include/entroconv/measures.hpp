#pragma once

#include <cstdint>

#include "entroconv/density.hpp"

namespace entroconv {

enum class Quantity { Entropy, Kl, Variation, Kolmogorov };
enum class Finiteness { Finite, Diverged, BudgetExceeded };

struct MeasureValue {
    Quantity quantity = Quantity::Entropy;
    double value = 0.0;
    double error_estimate = 0.0;
    Finiteness verdict = Finiteness::Finite;
};

struct MeasureOptions {
    double tol = 1e-9;
    double divergence_cap = 1e6;    // cap on the running absolute integral
    std::size_t max_intervals = 1'000'000;
    std::size_t probe_count = 10'000; // domination / sup probes
    std::uint64_t seed = 0;
    std::size_t cdf_grid = 2048;      // refinement grid for the CDF supremum
};

/// Differential entropy -integral of rho * log2(rho), in bits. Exact cell
/// summation for piecewise-constant densities; a carried closed form is used
/// when present; otherwise adaptive quadrature with divergence detection.
MeasureValue differential_entropy(const Density& d, const MeasureOptions& opts = {});

/// Kullback-Leibler discriminant between num and den, in bits. Checks that
/// num vanishes wherever den does (merged cells for piecewise-constant
/// pairs, probe points otherwise) and throws DominationError if not.
MeasureValue kl_divergence(const Density& num, const Density& den,
                           const MeasureOptions& opts = {});

/// Distance in variation: the L1 distance of the densities over the union of
/// their supports. Lies in [0,2]; exact for piecewise-constant pairs.
MeasureValue variation_distance(const Density& a, const Density& b,
                                const MeasureOptions& opts = {});

/// Kolmogorov distance sup_x |F_a(x) - F_b(x)| over merged breakpoints plus
/// a refinement grid. Exact for piecewise-constant pairs, whose CDF gap is
/// piecewise linear with extrema at breakpoints.
MeasureValue kolmogorov_distance(const Density& a, const Density& b,
                                 const MeasureOptions& opts = {});

struct PinskerCheck {
    double variation = 0.0;
    double kl = 0.0;
    double bound = 0.0; // sqrt(2 * kl)
    bool holds = false;
};

/// Compares the variation distance against sqrt(2 * KL(a||b)).
PinskerCheck pinsker_check(const Density& a, const Density& b,
                           const MeasureOptions& opts = {});

/// Throws DominationError unless num evaluates to 0 wherever den does, over
/// merged cells (piecewise-constant pairs) or probe points.
void check_domination(const Density& num, const Density& den,
                      const MeasureOptions& opts = {});

} // namespace entroconv
