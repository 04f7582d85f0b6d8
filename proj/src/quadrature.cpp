#include "entroconv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "entroconv/errors.hpp"

namespace entroconv {

namespace {

constexpr double kEpmach = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

// 15-point Kronrod abscissae (positive half) and weights; the embedded
// 7-point Gauss rule sits on xgk[1], xgk[3], xgk[5] and the centre.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct RuleEval {
    double result = 0.0;
    double abserr = 0.0;
    double resabs = 0.0; // estimate of integral of |f|
};

RuleEval gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::fabs(hlgth);

    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        fv1[jtw] = f(centr - absc);
        fv2[jtw] = f(centr + absc);
        const double fsum = fv1[jtw] + fv2[jtw];
        resg += kWg[j] * fsum;
        resk += kWgk[jtw] * fsum;
        resabs += kWgk[jtw] * (std::fabs(fv1[jtw]) + std::fabs(fv2[jtw]));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        fv1[jtwm1] = f(centr - absc);
        fv2[jtwm1] = f(centr + absc);
        const double fsum = fv1[jtwm1] + fv2[jtwm1];
        resk += kWgk[jtwm1] * fsum;
        resabs += kWgk[jtwm1] * (std::fabs(fv1[jtwm1]) + std::fabs(fv2[jtwm1]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    RuleEval out;
    out.result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    out.resabs = resabs;
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (resabs > kUflow / (50.0 * kEpmach))
        abserr = std::max(kEpmach * 50.0 * resabs, abserr);
    out.abserr = abserr;
    return out;
}

struct Interval {
    double a, b;
    double value, error, resabs;
    std::uint64_t seq; // insertion order, ties broken deterministically
};

struct WorstFirst {
    bool operator()(const Interval& x, const Interval& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

QuadratureResult adaptive(const std::function<double(double)>& f,
                          const std::vector<double>& seeds, // sorted cell edges incl. endpoints
                          const QuadratureOptions& opts) {
    std::priority_queue<Interval, std::vector<Interval>, WorstFirst> active;
    double total_value = 0.0, total_error = 0.0, total_resabs = 0.0;
    double done_value = 0.0, done_error = 0.0; // intervals too narrow to split further
    std::uint64_t seq = 0;
    std::size_t intervals = 0;

    auto push = [&](double a, double b) {
        const RuleEval r = gauss_kronrod_15(f, a, b);
        total_value += r.result;
        total_error += r.abserr;
        total_resabs += r.resabs;
        active.push(Interval{a, b, r.result, r.abserr, r.resabs, seq++});
        ++intervals;
    };

    for (std::size_t i = 0; i + 1 < seeds.size(); ++i)
        if (seeds[i] < seeds[i + 1]) push(seeds[i], seeds[i + 1]);

    while (total_error > opts.tol && !active.empty()) {
        if (total_resabs > opts.divergence_cap)
            throw DivergenceError("running absolute integral exceeded the divergence cap",
                                  total_resabs);
        if (intervals >= opts.max_intervals)
            throw BudgetExceededError("adaptive integration exceeded the subdivision cap",
                                      total_value, total_error);
        const Interval worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval at roundoff width; its error cannot be reduced further
            done_value += worst.value;
            done_error += worst.error;
            total_value -= worst.value;
            total_error -= worst.error;
            if (active.empty() && done_error + total_error > opts.tol)
                throw BudgetExceededError(
                    "integration error stuck above tolerance at roundoff-width intervals",
                    total_value + done_value, total_error + done_error);
            continue;
        }
        total_value -= worst.value;
        total_error -= worst.error;
        total_resabs -= worst.resabs;
        push(worst.a, mid);
        push(mid, worst.b);
    }

    QuadratureResult res;
    res.value = total_value + done_value;
    res.error_estimate = total_error + done_error;
    res.subdivisions = intervals;
    res.exact = false;
    return res;
}

double map_half_line(double t, double anchor, HalfLineDirection dir) {
    const double r = t / (1.0 - t);
    return dir == HalfLineDirection::Up ? anchor + r : anchor - r;
}

double unmap_half_line(double x, double anchor, HalfLineDirection dir) {
    const double r = dir == HalfLineDirection::Up ? x - anchor : anchor - x;
    return r / (1.0 + r);
}

std::vector<double> seed_cells(const std::vector<double>& breakpoints, double lo, double hi) {
    std::vector<double> seeds;
    seeds.push_back(lo);
    for (double b : breakpoints)
        if (b > lo && b < hi) seeds.push_back(b);
    seeds.push_back(hi);
    return seeds;
}

QuadratureResult exact_cell_sum(const Integrand& f, double lo, double hi) {
    // piecewise-constant contract: constant on each open cell, zero outside
    QuadratureResult res;
    res.exact = true;
    double sum = 0.0, comp = 0.0; // Neumaier compensation
    for (std::size_t i = 0; i + 1 < f.breakpoints.size(); ++i) {
        const double a = std::max(f.breakpoints[i], lo);
        const double b = std::min(f.breakpoints[i + 1], hi);
        if (!(a < b)) continue;
        const double term = f.fn(0.5 * (a + b)) * (b - a);
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        ++res.subdivisions;
    }
    res.value = sum + comp;
    return res;
}

} // namespace

QuadratureResult integrate_lebesgue(const Integrand& f, const SupportSpec& support,
                                    const QuadratureOptions& opts) {
    if (!f.fn)
        throw ArgumentError("integrate_lebesgue: empty integrand");
    if (!(opts.tol > 0.0))
        throw ArgumentError("integrate_lebesgue: tolerance must be positive");
    if (!support.one_dimensional())
        throw UnsupportedDimensionError("integrate_lebesgue: 2-D supports are not handled here");

    if (f.piecewise_constant) {
        if (f.breakpoints.size() < 2) return QuadratureResult{0.0, 0.0, 0, true};
        return exact_cell_sum(f, support.lower(), support.upper());
    }

    if (support.kind() == SupportKind::BoundedInterval) {
        return adaptive(f.fn, seed_cells(f.breakpoints, support.lower(), support.upper()), opts);
    }

    // half-line: pull back through x = a +/- t/(1-t), dx = dt/(1-t)^2
    const double anchor = support.anchor();
    const HalfLineDirection dir = support.direction();
    auto g = [&f, anchor, dir](double t) {
        const double u = 1.0 - t;
        const double x = map_half_line(t, anchor, dir);
        const double v = f.fn(x);
        return v == 0.0 ? 0.0 : v / (u * u);
    };
    std::vector<double> tb;
    for (double b : f.breakpoints) {
        const double t = unmap_half_line(b, anchor, dir);
        if (t > 0.0 && t < 1.0) tb.push_back(t);
    }
    std::sort(tb.begin(), tb.end());
    return adaptive(g, seed_cells(tb, 0.0, 1.0), opts);
}

QuadratureResult integrate_against(const Integrand& f, const Density& d,
                                   const QuadratureOptions& opts) {
    if (!d.one_dimensional())
        throw UnsupportedDimensionError("integrate_against: density must be 1-D");

    if (d.is_piecewise_constant()) {
        const auto& pc = d.pc();
        if (f.piecewise_constant) {
            Integrand product;
            product.breakpoints = merge_breakpoints(f.breakpoints, pc.breakpoints);
            product.piecewise_constant = true;
            product.fn = [&f, &d](double x) {
                const double dv = d.evaluate(x);
                return dv == 0.0 ? 0.0 : f.fn(x) * dv;
            };
            return exact_cell_sum(product, pc.breakpoints.front(), pc.breakpoints.back());
        }
        Integrand g;
        g.breakpoints = merge_breakpoints(f.breakpoints, pc.breakpoints);
        g.fn = [&f, &d](double x) {
            const double dv = d.evaluate(x);
            return dv == 0.0 ? 0.0 : f.fn(x) * dv;
        };
        return integrate_lebesgue(g, d.support(), opts);
    }

    Integrand g;
    g.breakpoints = f.breakpoints;
    g.fn = [&f, &d](double x) {
        const double dv = d.evaluate(x);
        return dv == 0.0 ? 0.0 : f.fn(x) * dv;
    };
    return integrate_lebesgue(g, d.support(), opts);
}

} // namespace entroconv
