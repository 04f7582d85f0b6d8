#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "entroconv/support.hpp"

namespace entroconv {

/// A continuous probability density over a declared support. Immutable after
/// construction; all validity checks (sorted breakpoints, nonnegativity,
/// normalization) happen in the factory functions, which throw
/// ConstructionError with a diagnostic on bad input.
class Density {
public:
    struct PiecewiseConstant {
        std::vector<double> breakpoints; // strictly increasing, size m+1
        std::vector<double> values;      // nonnegative, size m
        std::vector<double> cumulative;  // prefix masses, size m+1, built at construction
        double total_mass = 1.0;
    };

    struct Analytic {
        std::function<double(double)> evaluate;
        std::optional<double> closed_form_entropy;  // base-2, when known
        std::optional<double> log_density_sup;      // sup |log2 density|, when known
    };

    struct RegionUniform {
        double level = 1.0; // constant density value over the region
    };

    using Representation = std::variant<PiecewiseConstant, Analytic, RegionUniform>;

    /// Piecewise-constant density on [breakpoints.front(), breakpoints.back()].
    /// Cells are half-open [b_i, b_{i+1}); the final cell is closed. Total
    /// mass must be 1 within `normalization_tol`.
    static Density piecewise_constant(std::vector<double> breakpoints,
                                      std::vector<double> values,
                                      double normalization_tol = 1e-9);

    /// Analytic density over a 1-D support. Normalization is checked by
    /// quadrature unless `skip_mass_check` (used for densities whose mass
    /// integral is validated elsewhere).
    static Density analytic(SupportSpec support,
                            std::function<double(double)> evaluate,
                            bool strictly_positive,
                            std::optional<double> closed_form_entropy = std::nullopt,
                            std::optional<double> log_density_sup = std::nullopt,
                            double normalization_tol = 1e-9,
                            bool skip_mass_check = false);

    /// Uniform density of the given level over a plane region. The region's
    /// Lebesgue measure is taken from the support declaration or computed by
    /// 1-D quadrature of the cross-section; level * measure must be 1.
    static Density region_uniform(SupportSpec region, double level,
                                  double normalization_tol = 1e-9);

    const SupportSpec& support() const { return support_; }
    const Representation& representation() const { return repr_; }
    bool strictly_positive() const { return strictly_positive_; }

    bool is_piecewise_constant() const;
    const PiecewiseConstant& pc() const; // throws unless piecewise-constant
    bool one_dimensional() const { return support_.one_dimensional(); }

    /// Density value at x; 0 outside the support.
    double evaluate(double x) const;
    double evaluate(double x1, double x2) const;

    /// Distribution function P[X <= x]. Exact prefix accumulation for
    /// piecewise-constant densities, quadrature otherwise. 1-D only.
    double cdf(double x) const;

    /// Mass of [a, b] = cdf(b) - cdf(a); requires a <= b. 1-D only.
    double mass(double a, double b) const;

private:
    Density(SupportSpec s, Representation r, bool strictly_positive)
        : support_(std::move(s)), repr_(std::move(r)), strictly_positive_(strictly_positive) {}

    SupportSpec support_;
    Representation repr_;
    bool strictly_positive_ = false;
};

/// Radon-Nikodym ratio numerator/denominator with a floor value used only on
/// the denominator's zero set. The floor defaults to 0 so that the ratio
/// contributes nothing where the denominator carries no mass.
class RatioFunction {
public:
    RatioFunction(const Density& numerator, const Density& denominator, double floor = 0.0)
        : num_(&numerator), den_(&denominator), floor_(floor) {}

    double operator()(double x) const {
        const double d = den_->evaluate(x);
        if (d > 0.0) return num_->evaluate(x) / d;
        return floor_;
    }

    double floor() const { return floor_; }
    const Density& numerator() const { return *num_; }
    const Density& denominator() const { return *den_; }

private:
    const Density* num_;
    const Density* den_;
    double floor_;
};

/// Merge two sorted breakpoint lists, dropping exact duplicates.
std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b);

} // namespace entroconv
