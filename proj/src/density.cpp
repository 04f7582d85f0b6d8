#include "entroconv/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entroconv/errors.hpp"
#include "entroconv/quadrature.hpp"

namespace entroconv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// SupportSpec

SupportSpec SupportSpec::bounded_interval(double a, double b) {
    if (!(a < b))
        throw ConstructionError("bounded interval requires a < b");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw ConstructionError("bounded interval endpoints must be finite");
    SupportSpec s;
    s.kind_ = SupportKind::BoundedInterval;
    s.a_ = a;
    s.b_ = b;
    return s;
}

SupportSpec SupportSpec::half_line(double a, HalfLineDirection dir) {
    if (!std::isfinite(a))
        throw ConstructionError("half-line anchor must be finite");
    SupportSpec s;
    s.kind_ = SupportKind::HalfLine;
    s.a_ = a;
    s.b_ = (dir == HalfLineDirection::Up) ? kInf : -kInf;
    s.direction_ = dir;
    s.measure_ = kInf;
    return s;
}

SupportSpec SupportSpec::plane_region(std::function<bool(double, double)> indicator,
                                      SupportSpec x1_domain,
                                      std::function<double(double)> cross_section) {
    if (!indicator || !cross_section)
        throw ConstructionError("plane region requires an indicator and a cross-section");
    if (!x1_domain.one_dimensional())
        throw ConstructionError("plane region x1 domain must be 1-D");
    SupportSpec s;
    s.kind_ = SupportKind::PlaneRegion;
    s.indicator_ = std::move(indicator);
    s.cross_section_ = std::move(cross_section);
    s.x1_domain_ = std::make_shared<SupportSpec>(std::move(x1_domain));
    return s;
}

double SupportSpec::lower() const {
    switch (kind_) {
    case SupportKind::BoundedInterval: return a_;
    case SupportKind::HalfLine: return direction_ == HalfLineDirection::Up ? a_ : -kInf;
    default: throw UnsupportedDimensionError("lower(): 2-D support has no scalar bounds");
    }
}

double SupportSpec::upper() const {
    switch (kind_) {
    case SupportKind::BoundedInterval: return b_;
    case SupportKind::HalfLine: return direction_ == HalfLineDirection::Up ? kInf : a_;
    default: throw UnsupportedDimensionError("upper(): 2-D support has no scalar bounds");
    }
}

bool SupportSpec::contains(double x) const {
    if (!one_dimensional())
        throw UnsupportedDimensionError("contains(x): support is 2-D");
    return x >= lower() && x <= upper();
}

bool SupportSpec::contains(double x1, double x2) const {
    if (kind_ != SupportKind::PlaneRegion)
        throw UnsupportedDimensionError("contains(x1,x2): support is 1-D");
    return indicator_(x1, x2);
}

const SupportSpec& SupportSpec::x1_domain() const {
    if (kind_ != SupportKind::PlaneRegion)
        throw UnsupportedDimensionError("x1_domain(): support is 1-D");
    return *x1_domain_;
}

double SupportSpec::cross_section(double x1) const {
    if (kind_ != SupportKind::PlaneRegion)
        throw UnsupportedDimensionError("cross_section(): support is 1-D");
    return cross_section_(x1);
}

SupportSpec& SupportSpec::declare_lebesgue_measure(double m) {
    if (m < 0.0 || std::isnan(m))
        throw ConstructionError("declared Lebesgue measure must be nonnegative");
    if (kind_ == SupportKind::BoundedInterval && std::isfinite(m) &&
        std::fabs(m - (b_ - a_)) > 1e-12) {
        std::ostringstream os;
        os << "declared Lebesgue measure " << m << " does not match interval length "
           << (b_ - a_);
        throw ConstructionError(os.str());
    }
    measure_ = m;
    return *this;
}

// ---------------------------------------------------------------------------
// Density

Density Density::piecewise_constant(std::vector<double> breakpoints,
                                    std::vector<double> values,
                                    double normalization_tol) {
    if (breakpoints.size() < 2)
        throw ConstructionError("piecewise-constant density needs at least 2 breakpoints");
    if (values.size() + 1 != breakpoints.size())
        throw ConstructionError("piecewise-constant density needs one value per cell");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw ConstructionError("breakpoints must be strictly increasing");
    }
    for (double b : breakpoints) {
        if (!std::isfinite(b))
            throw ConstructionError("breakpoints must be finite");
    }
    bool positive = true;
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw ConstructionError("cell values must be finite and nonnegative");
        if (v == 0.0) positive = false;
    }

    PiecewiseConstant pc;
    pc.breakpoints = std::move(breakpoints);
    pc.values = std::move(values);
    pc.cumulative.resize(pc.breakpoints.size());
    pc.cumulative[0] = 0.0;
    for (std::size_t i = 0; i < pc.values.size(); ++i) {
        const double w = pc.breakpoints[i + 1] - pc.breakpoints[i];
        pc.cumulative[i + 1] = pc.cumulative[i] + pc.values[i] * w;
    }
    pc.total_mass = pc.cumulative.back();
    if (std::fabs(pc.total_mass - 1.0) > normalization_tol) {
        std::ostringstream os;
        os << "piecewise-constant density has total mass " << pc.total_mass
           << ", expected 1 within " << normalization_tol;
        throw ConstructionError(os.str());
    }

    SupportSpec s = SupportSpec::bounded_interval(pc.breakpoints.front(), pc.breakpoints.back());
    s.declare_lebesgue_measure(pc.breakpoints.back() - pc.breakpoints.front());
    return Density(std::move(s), Representation(std::move(pc)), positive);
}

Density Density::analytic(SupportSpec support, std::function<double(double)> evaluate,
                          bool strictly_positive,
                          std::optional<double> closed_form_entropy,
                          std::optional<double> log_density_sup,
                          double normalization_tol, bool skip_mass_check) {
    if (!support.one_dimensional())
        throw ConstructionError("analytic densities are 1-D; use region_uniform for 2-D");
    if (!evaluate)
        throw ConstructionError("analytic density requires an evaluator");

    Analytic a;
    a.evaluate = std::move(evaluate);
    a.closed_form_entropy = closed_form_entropy;
    a.log_density_sup = log_density_sup;

    if (!skip_mass_check) {
        Integrand mass_f{a.evaluate, {}, false};
        const QuadratureResult r =
            integrate_lebesgue(mass_f, support, {std::max(normalization_tol, 1e-12), 200'000, 1e9});
        if (std::fabs(r.value - 1.0) > std::max(normalization_tol, 10.0 * r.error_estimate)) {
            std::ostringstream os;
            os << "analytic density has total mass " << r.value << ", expected 1";
            throw ConstructionError(os.str());
        }
    }
    return Density(std::move(support), Representation(std::move(a)), strictly_positive);
}

Density Density::region_uniform(SupportSpec region, double level, double normalization_tol) {
    if (region.kind() != SupportKind::PlaneRegion)
        throw ConstructionError("region_uniform requires a plane-region support");
    if (!(level > 0.0) || !std::isfinite(level))
        throw ConstructionError("region-uniform level must be positive and finite");

    double measure;
    if (region.declared_lebesgue_measure() && std::isfinite(*region.declared_lebesgue_measure())) {
        measure = *region.declared_lebesgue_measure();
    } else {
        Integrand cs{[&region](double x1) { return region.cross_section(x1); }, {}, false};
        measure = integrate_lebesgue(cs, region.x1_domain(), {1e-12, 200'000, 1e9}).value;
    }
    if (std::fabs(level * measure - 1.0) > normalization_tol) {
        std::ostringstream os;
        os << "region-uniform density has mass " << level * measure << ", expected 1";
        throw ConstructionError(os.str());
    }
    RegionUniform ru;
    ru.level = level;
    return Density(std::move(region), Representation(ru), true);
}

bool Density::is_piecewise_constant() const {
    return std::holds_alternative<PiecewiseConstant>(repr_);
}

const Density::PiecewiseConstant& Density::pc() const {
    if (!is_piecewise_constant())
        throw ArgumentError("density is not piecewise-constant");
    return std::get<PiecewiseConstant>(repr_);
}

double Density::evaluate(double x) const {
    if (!one_dimensional())
        throw UnsupportedDimensionError("evaluate(x) on a 2-D density; pass two coordinates");
    if (const auto* p = std::get_if<PiecewiseConstant>(&repr_)) {
        const auto& b = p->breakpoints;
        if (x < b.front() || x > b.back()) return 0.0;
        if (x == b.back()) return p->values.back();
        // cells are [b_i, b_{i+1}); endpoint evaluation picks the right cell
        const auto it = std::upper_bound(b.begin(), b.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - b.begin()) - 1;
        return p->values[i];
    }
    const auto& a = std::get<Analytic>(repr_);
    if (!support_.contains(x)) return 0.0;
    const double v = a.evaluate(x);
    return v > 0.0 ? v : 0.0;
}

double Density::evaluate(double x1, double x2) const {
    if (one_dimensional())
        throw UnsupportedDimensionError("evaluate(x1,x2) on a 1-D density");
    const auto& ru = std::get<RegionUniform>(repr_);
    return support_.contains(x1, x2) ? ru.level : 0.0;
}

double Density::cdf(double x) const {
    if (!one_dimensional())
        throw UnsupportedDimensionError("cdf is defined for 1-D supports only");
    if (const auto* p = std::get_if<PiecewiseConstant>(&repr_)) {
        const auto& b = p->breakpoints;
        if (x <= b.front()) return 0.0;
        if (x >= b.back()) return 1.0;
        const auto it = std::upper_bound(b.begin(), b.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - b.begin()) - 1;
        const double partial = p->cumulative[i] + p->values[i] * (x - b[i]);
        // normalize by the accumulated total so cdf(upper) is exactly 1
        return std::min(partial / p->total_mass, 1.0);
    }
    const double lo = support_.lower();
    if (x <= lo) return 0.0;
    if (x >= support_.upper()) return 1.0;
    const auto& a = std::get<Analytic>(repr_);
    Integrand f{a.evaluate, {}, false};
    if (std::isfinite(lo)) {
        const QuadratureResult r =
            integrate_lebesgue(f, SupportSpec::bounded_interval(lo, x), {1e-12, 200'000, 1e9});
        return std::clamp(r.value, 0.0, 1.0);
    }
    // downward half-line: accumulate the upper tail and complement
    const QuadratureResult tail = integrate_lebesgue(
        f, SupportSpec::bounded_interval(x, support_.upper()), {1e-12, 200'000, 1e9});
    return std::clamp(1.0 - tail.value, 0.0, 1.0);
}

double Density::mass(double a, double b) const {
    if (a > b)
        throw ArgumentError("mass(a,b) requires a <= b");
    return cdf(b) - cdf(a);
}

std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace entroconv
