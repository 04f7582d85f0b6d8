#include "entroconv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "entroconv/errors.hpp"
#include "entroconv/probes.hpp"
#include "entroconv/quadrature.hpp"

namespace entroconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double neumaier_sum(const std::vector<double>& terms) {
    double sum = 0.0, comp = 0.0;
    for (double term : terms) {
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

QuadratureOptions quad_opts(const MeasureOptions& m) {
    return QuadratureOptions{m.tol, m.max_intervals, m.divergence_cap};
}

// Hull of two 1-D supports; the union of the supports is contained in it and
// both densities vanish outside their own support, so integrating a
// difference over the hull covers the union.
SupportSpec union_hull(const SupportSpec& a, const SupportSpec& b) {
    const double lo = std::min(a.lower(), b.lower());
    const double hi = std::max(a.upper(), b.upper());
    if (std::isfinite(lo) && std::isfinite(hi)) return SupportSpec::bounded_interval(lo, hi);
    if (std::isfinite(lo)) return SupportSpec::half_line(lo, HalfLineDirection::Up);
    if (std::isfinite(hi)) return SupportSpec::half_line(hi, HalfLineDirection::Down);
    throw ArgumentError("union of supports covers the whole line; not supported");
}

std::vector<double> pair_breakpoints(const Density& a, const Density& b) {
    std::vector<double> bp;
    if (a.is_piecewise_constant()) bp = a.pc().breakpoints;
    if (b.is_piecewise_constant()) bp = merge_breakpoints(bp, b.pc().breakpoints);
    return bp;
}

void require_1d_pair(const Density& a, const Density& b, const char* op) {
    if (!a.one_dimensional() || !b.one_dimensional())
        throw UnsupportedDimensionError(std::string(op) + ": both densities must be 1-D");
}

MeasureValue run_signed_integral(Quantity q, const std::function<double(double)>& signed_fn,
                                 const std::function<double(double)>& abs_fn,
                                 const std::vector<double>& breakpoints,
                                 const SupportSpec& support, const MeasureOptions& opts) {
    MeasureValue out;
    out.quantity = q;
    try {
        const QuadratureResult abs_part =
            integrate_lebesgue(Integrand{abs_fn, breakpoints, false}, support, quad_opts(opts));
        (void)abs_part; // finite: proceed with the signed integral
        const QuadratureResult r =
            integrate_lebesgue(Integrand{signed_fn, breakpoints, false}, support, quad_opts(opts));
        out.value = r.value;
        out.error_estimate = r.error_estimate;
        out.verdict = Finiteness::Finite;
    } catch (const DivergenceError& e) {
        out.value = e.lower_bound;
        out.error_estimate = kInf;
        out.verdict = Finiteness::Diverged;
    } catch (const BudgetExceededError& e) {
        out.value = e.best_value;
        out.error_estimate = e.best_error;
        out.verdict = Finiteness::BudgetExceeded;
    }
    return out;
}

} // namespace

MeasureValue differential_entropy(const Density& d, const MeasureOptions& opts) {
    MeasureValue out;
    out.quantity = Quantity::Entropy;

    if (d.is_piecewise_constant()) {
        const auto& pc = d.pc();
        std::vector<double> terms;
        terms.reserve(pc.values.size());
        for (std::size_t i = 0; i < pc.values.size(); ++i) {
            const double v = pc.values[i];
            if (v <= 0.0) continue; // 0 log 0 = 0
            terms.push_back(-v * std::log2(v) * (pc.breakpoints[i + 1] - pc.breakpoints[i]));
        }
        out.value = neumaier_sum(terms);
        return out;
    }
    if (!d.one_dimensional()) {
        // region-uniform: log2 density is constant on the support
        const double level = std::get<Density::RegionUniform>(d.representation()).level;
        out.value = -std::log2(level);
        return out;
    }
    const auto& an = std::get<Density::Analytic>(d.representation());
    if (an.closed_form_entropy) {
        out.value = *an.closed_form_entropy;
        return out;
    }
    auto rho = [&d](double x) { return d.evaluate(x); };
    auto signed_fn = [rho](double x) {
        const double v = rho(x);
        return v > 0.0 ? -v * std::log2(v) : 0.0;
    };
    auto abs_fn = [rho](double x) {
        const double v = rho(x);
        return v > 0.0 ? std::fabs(v * std::log2(v)) : 0.0;
    };
    return run_signed_integral(Quantity::Entropy, signed_fn, abs_fn, {}, d.support(), opts);
}

void check_domination(const Density& num, const Density& den, const MeasureOptions& opts) {
    require_1d_pair(num, den, "check_domination");
    if (num.is_piecewise_constant() && den.is_piecewise_constant()) {
        const auto grid = pair_breakpoints(num, den);
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double mid = 0.5 * (grid[i] + grid[i + 1]);
            if (num.evaluate(mid) > 0.0 && den.evaluate(mid) == 0.0) {
                std::ostringstream os;
                os << "numerator carries mass on (" << grid[i] << ", " << grid[i + 1]
                   << ") where the denominator vanishes";
                throw DominationError(os.str());
            }
        }
        return;
    }
    std::vector<double> pts = probe_points(num.support(), opts.probe_count, opts.seed);
    for (double b : pair_breakpoints(num, den))
        if (num.support().contains(b)) pts.push_back(b);
    for (double x : pts) {
        if (num.evaluate(x) > 0.0 && den.evaluate(x) == 0.0) {
            std::ostringstream os;
            os << "numerator positive at x = " << x << " where the denominator vanishes";
            throw DominationError(os.str());
        }
    }
}

MeasureValue kl_divergence(const Density& num, const Density& den,
                           const MeasureOptions& opts) {
    require_1d_pair(num, den, "kl_divergence");
    check_domination(num, den, opts);

    MeasureValue out;
    out.quantity = Quantity::Kl;
    if (num.is_piecewise_constant() && den.is_piecewise_constant()) {
        const auto grid = pair_breakpoints(num, den);
        std::vector<double> terms;
        terms.reserve(grid.size());
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double mid = 0.5 * (grid[i] + grid[i + 1]);
            const double p = num.evaluate(mid);
            if (p <= 0.0) continue; // 0 log(0/q) = 0
            const double q = den.evaluate(mid);
            terms.push_back(p * std::log2(p / q) * (grid[i + 1] - grid[i]));
        }
        out.value = neumaier_sum(terms);
        return out;
    }
    auto signed_fn = [&num, &den](double x) {
        const double p = num.evaluate(x);
        if (p <= 0.0) return 0.0;
        const double q = den.evaluate(x);
        if (q <= 0.0) return 0.0; // excluded up to probe resolution
        return p * std::log2(p / q);
    };
    auto abs_fn = [signed_fn](double x) { return std::fabs(signed_fn(x)); };
    return run_signed_integral(Quantity::Kl, signed_fn, abs_fn, pair_breakpoints(num, den),
                               num.support(), opts);
}

MeasureValue variation_distance(const Density& a, const Density& b,
                                const MeasureOptions& opts) {
    require_1d_pair(a, b, "variation_distance");
    MeasureValue out;
    out.quantity = Quantity::Variation;
    if (a.is_piecewise_constant() && b.is_piecewise_constant()) {
        const auto grid = pair_breakpoints(a, b);
        std::vector<double> terms;
        terms.reserve(grid.size());
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double mid = 0.5 * (grid[i] + grid[i + 1]);
            terms.push_back(std::fabs(a.evaluate(mid) - b.evaluate(mid)) *
                            (grid[i + 1] - grid[i]));
        }
        out.value = neumaier_sum(terms);
        return out;
    }
    auto fn = [&a, &b](double x) { return std::fabs(a.evaluate(x) - b.evaluate(x)); };
    return run_signed_integral(Quantity::Variation, fn, fn, pair_breakpoints(a, b),
                               union_hull(a.support(), b.support()), opts);
}

MeasureValue kolmogorov_distance(const Density& a, const Density& b,
                                 const MeasureOptions& opts) {
    require_1d_pair(a, b, "kolmogorov_distance");
    MeasureValue out;
    out.quantity = Quantity::Kolmogorov;

    std::vector<double> grid = pair_breakpoints(a, b);
    const bool both_pc = a.is_piecewise_constant() && b.is_piecewise_constant();
    if (!both_pc) {
        // refine: the CDF gap of analytic densities can peak between breakpoints
        const SupportSpec hull = union_hull(a.support(), b.support());
        const double lo = hull.lower(), hi = hull.upper();
        for (std::size_t i = 0; i <= opts.cdf_grid; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(opts.cdf_grid);
            double x;
            if (std::isfinite(lo) && std::isfinite(hi)) {
                x = lo + t * (hi - lo);
            } else if (t == 1.0 || t == 0.0) {
                continue;
            } else if (std::isfinite(lo)) {
                x = lo + t / (1.0 - t);
            } else {
                x = hi - t / (1.0 - t);
            }
            grid.push_back(x);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }

    double sup = 0.0;
    double prev_fa = -1.0, prev_fb = -1.0, max_step = 0.0;
    for (double x : grid) {
        const double fa = a.cdf(x);
        const double fb = b.cdf(x);
        sup = std::max(sup, std::fabs(fa - fb));
        if (prev_fa >= 0.0)
            max_step = std::max(max_step, std::max(fa - prev_fa, fb - prev_fb));
        prev_fa = fa;
        prev_fb = fb;
    }
    out.value = sup;
    out.error_estimate = both_pc ? 0.0 : max_step;
    return out;
}

PinskerCheck pinsker_check(const Density& a, const Density& b, const MeasureOptions& opts) {
    const MeasureValue v = variation_distance(a, b, opts);
    const MeasureValue kl = kl_divergence(a, b, opts);
    PinskerCheck out;
    out.variation = v.value;
    out.kl = kl.value;
    out.bound = std::sqrt(2.0 * std::max(kl.value, 0.0));
    out.holds = out.variation <= out.bound + v.error_estimate + kl.error_estimate + 1e-9;
    return out;
}

} // namespace entroconv
