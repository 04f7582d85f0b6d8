#include "entroconv/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entroconv/errors.hpp"
#include "entroconv/probes.hpp"
#include "entroconv/quadrature.hpp"

namespace entroconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2E = 1.4426950408889634;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Essential sup of |log2 density| against Lebesgue measure: exact over the
// positive-width cells of a piecewise-constant density, probe-based otherwise.
double log_density_sup(const Density& d, const MeasureOptions& opts) {
    if (d.is_piecewise_constant()) {
        double sup = 0.0;
        for (double v : d.pc().values) {
            if (v == 0.0) return kInf;
            sup = std::max(sup, std::fabs(std::log2(v)));
        }
        return sup;
    }
    double sup = 0.0;
    for (double x : probe_points(d.support(), opts.probe_count, opts.seed)) {
        const double v = d.evaluate(x);
        if (v == 0.0) return kInf;
        sup = std::max(sup, std::fabs(std::log2(v)));
    }
    return sup;
}

double density_sup(const Density& d, const MeasureOptions& opts) {
    if (d.is_piecewise_constant()) {
        double sup = 0.0;
        for (double v : d.pc().values) sup = std::max(sup, v);
        return sup;
    }
    double sup = 0.0;
    for (double x : probe_points(d.support(), opts.probe_count, opts.seed))
        sup = std::max(sup, d.evaluate(x));
    return sup;
}

bool probed_positive(const Density& d, const MeasureOptions& opts) {
    if (d.is_piecewise_constant()) return d.strictly_positive();
    if (!d.strictly_positive()) return false;
    for (double x : probe_points(d.support(), opts.probe_count, opts.seed))
        if (!(d.evaluate(x) > 0.0)) return false;
    return true;
}

// Probe grid for ratio statistics: merged cell midpoints when both densities
// are piecewise-constant (exact), quasi-random probes otherwise.
std::vector<double> ratio_probe_grid(const Density& member, const Density& limit,
                                     const MeasureOptions& opts) {
    if (member.is_piecewise_constant() && limit.is_piecewise_constant()) {
        const auto grid =
            merge_breakpoints(member.pc().breakpoints, limit.pc().breakpoints);
        std::vector<double> mids;
        mids.reserve(grid.size());
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            mids.push_back(0.5 * (grid[i] + grid[i + 1]));
        return mids;
    }
    return probe_points(limit.support(), opts.probe_count, opts.seed);
}

struct RatioStats {
    double sup = 0.0;            // sup of dmu_n/dmu where the limit has mass
    double max_gap = 0.0;        // sup |dmu_n/dmu - 1|
    double sup_xlogx = 0.0;      // sup |ratio * log2 ratio|
};

RatioStats ratio_stats(const Density& member, const Density& limit,
                       const MeasureOptions& opts) {
    RatioStats s;
    const RatioFunction ratio(member, limit);
    for (double x : ratio_probe_grid(member, limit, opts)) {
        if (limit.evaluate(x) <= 0.0) continue;
        const double r = ratio(x);
        s.sup = std::max(s.sup, r);
        s.max_gap = std::max(s.max_gap, std::fabs(r - 1.0));
        if (r > 0.0) s.sup_xlogx = std::max(s.sup_xlogx, std::fabs(r * std::log2(r)));
    }
    return s;
}

// log2(a0)/(a0 - 1), extended continuously by log2(e) at a0 = 1.
double log_ratio_coefficient(double a0) {
    if (a0 == 1.0) return kLog2E;
    return std::log2(a0) / (a0 - 1.0);
}

struct RowInputs {
    double entropy_limit;
};

CertRow measure_row(int n, const Density& member, const Density& limit,
                    const RowInputs& in, const CertifyOptions& opts) {
    CertRow row;
    row.n = n;
    row.entropy_gap =
        std::fabs(differential_entropy(member, opts.measures).value - in.entropy_limit);
    row.kl = kl_divergence(member, limit, opts.measures).value;
    row.variation = variation_distance(member, limit, opts.measures).value;
    row.kolmogorov = kolmogorov_distance(member, limit, opts.measures).value;
    return row;
}

// Continuity proxy for log(dmu/dx) membership in C_b: a piecewise-constant
// limit passes only if constant; an analytic limit's adjacent-grid log jumps
// must stay below 10 * spacing * derivative bound. Without a declared bound
// the estimate comes from the same grid, which makes this a reported proxy
// rather than a proof.
HypothesisCheck continuity_proxy(const Density& limit, const FamilySpec& fam,
                                 const MeasureOptions& opts) {
    HypothesisCheck h;
    h.name = "limit-log-density-continuous";
    if (limit.is_piecewise_constant()) {
        const auto& vals = limit.pc().values;
        const bool constant =
            std::all_of(vals.begin(), vals.end(), [&](double v) { return v == vals.front(); });
        h.passed = constant;
        h.diagnostic = constant ? "piecewise-constant limit is constant"
                                : "piecewise-constant limit has jumps";
        return h;
    }
    const std::size_t cells = 1024;
    std::vector<double> grid = probe_points(limit.support(), cells, opts.seed);
    std::sort(grid.begin(), grid.end());
    double max_jump = 0.0, max_slope = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double v0 = limit.evaluate(grid[i]);
        const double v1 = limit.evaluate(grid[i + 1]);
        if (v0 <= 0.0 || v1 <= 0.0) {
            h.passed = false;
            h.diagnostic = "log density unbounded on the grid";
            return h;
        }
        const double jump = std::fabs(std::log2(v1) - std::log2(v0));
        max_jump = std::max(max_jump, jump);
        max_slope = std::max(max_slope, jump / (grid[i + 1] - grid[i]));
    }
    const double spacing = (grid.back() - grid.front()) / static_cast<double>(cells);
    const double bound = fam.log_density_derivative_bound.value_or(max_slope);
    h.passed = max_jump <= 10.0 * spacing * bound + 1e-12;
    h.diagnostic = "max adjacent log jump " + fmt(max_jump);
    return h;
}

void assert_n_list(const std::vector<int>& n_list) {
    if (n_list.empty()) throw ArgumentError("certification requires a nonempty n list");
    for (int n : n_list)
        if (n < 1) throw ArgumentError("certification n values must be positive");
}

} // namespace

DecompositionCheck kl_decomposition_check(const FamilySpec& fam, int n,
                                          const CertifyOptions& opts) {
    const Density member = fam.member(n);
    if (!fam.limit.strictly_positive())
        throw ArgumentError("kl_decomposition_check requires a strictly positive limit");
    check_domination(member, fam.limit, opts.measures);

    const MeasureValue direct = kl_divergence(member, fam.limit, opts.measures);
    const MeasureValue h_limit = differential_entropy(fam.limit, opts.measures);
    const MeasureValue h_member = differential_entropy(member, opts.measures);

    const Density& limit = fam.limit;
    Integrand log_limit;
    log_limit.fn = [&limit](double x) { return std::log2(limit.evaluate(x)); };
    if (limit.is_piecewise_constant()) {
        log_limit.breakpoints = limit.pc().breakpoints;
        log_limit.piecewise_constant = true;
    }
    const QuadratureOptions qopts{opts.measures.tol, opts.measures.max_intervals,
                                  opts.measures.divergence_cap};
    const QuadratureResult t_limit = integrate_against(log_limit, fam.limit, qopts);
    const QuadratureResult t_member = integrate_against(log_limit, member, qopts);

    DecompositionCheck out;
    out.kl_direct = direct.value;
    out.kl_via_decomposition =
        h_limit.value - h_member.value + t_limit.value - t_member.value;
    out.residual = std::fabs(out.kl_direct - out.kl_via_decomposition);
    out.combined_error = direct.error_estimate + h_limit.error_estimate +
                         h_member.error_estimate + t_limit.error_estimate +
                         t_member.error_estimate;
    return out;
}

Certificate certify_thm1(const FamilySpec& fam, const std::vector<int>& n_list,
                         const CertifyOptions& opts) {
    assert_n_list(n_list);
    Certificate cert;
    cert.theorem = TheoremId::Thm1Equivalence;

    const bool positive = probed_positive(fam.limit, opts.measures);
    cert.hypotheses.push_back({"limit-density-positive", positive,
                               positive ? "positive at every probe"
                                        : "vanishing value found on the support"});
    const double lsup =
        fam.limit_log_density_sup.value_or(log_density_sup(fam.limit, opts.measures));
    cert.constants["limit_log_density_sup"] = lsup;
    cert.hypotheses.push_back({"limit-log-density-bounded", lsup <= opts.sup_cap,
                               "sup |log2 density| = " + fmt(lsup)});
    cert.hypotheses.push_back(continuity_proxy(fam.limit, fam, opts.measures));

    const RowInputs in{differential_entropy(fam.limit, opts.measures).value};
    bool domination_ok = true;
    std::string domination_note;
    for (int n : n_list) {
        try {
            cert.rows.push_back(measure_row(n, fam.member(n), fam.limit, in, opts));
        } catch (const DominationError& e) {
            domination_ok = false;
            domination_note = e.what();
            break;
        }
    }
    if (!domination_ok)
        cert.hypotheses.push_back({"family-dominated", false, domination_note});

    if (!cert.hypotheses_met()) {
        cert.verdict = Verdict::HypothesisFailed;
        return cert;
    }
    const CertRow& last = cert.rows.back();
    const double thr = opts.convergence_threshold;
    const bool weak_and_entropy = *last.kolmogorov <= thr && last.entropy_gap <= thr;
    const bool kl_vanishes = last.kl <= thr;
    cert.diagnostics.push_back({"weak-and-entropy-converged", weak_and_entropy,
                                "kolmogorov " + fmt(*last.kolmogorov) + ", entropy gap " +
                                    fmt(last.entropy_gap)});
    cert.diagnostics.push_back({"kl-converged", kl_vanishes, "kl " + fmt(last.kl)});
    cert.diagnostics.push_back({"equivalence-consistent",
                                weak_and_entropy == kl_vanishes,
                                weak_and_entropy == kl_vanishes
                                    ? "both sides agree at the final n"
                                    : "one side vanished without the other"});
    cert.verdict = (weak_and_entropy && kl_vanishes) ? Verdict::Certified
                                                     : Verdict::Inconclusive;
    return cert;
}

VariationBoundConstants variation_bound_constants(const FamilySpec& fam,
                                                  const std::vector<int>& n_list,
                                                  const CertifyOptions& opts) {
    VariationBoundConstants c;
    if (fam.member_log_density_sup) {
        c.m = *fam.member_log_density_sup;
    } else {
        c.m = 0.0;
        for (int n : n_list)
            c.m = std::max(c.m, log_density_sup(fam.member(n), opts.measures));
    }
    c.limit_log_sup =
        fam.limit_log_density_sup.value_or(log_density_sup(fam.limit, opts.measures));
    if (!std::isfinite(c.m) || !std::isfinite(c.limit_log_sup)) {
        c.m_prime = 0.0;
        c.entropy_coeff = c.kl_coeff = kInf;
        return c;
    }
    c.finite = true;
    c.m_prime = std::exp2(-(c.m + c.limit_log_sup));
    c.m_prime_density_exponent = std::exp2(-(c.m + density_sup(fam.limit, opts.measures)));
    c.entropy_coeff = c.m + log_ratio_coefficient(c.m_prime);
    c.kl_coeff = log_ratio_coefficient(c.m_prime) / c.m_prime;
    return c;
}

Certificate certify_thm2(const FamilySpec& fam, const std::vector<int>& n_list,
                         const CertifyOptions& opts) {
    assert_n_list(n_list);
    Certificate cert;
    cert.theorem = TheoremId::Thm2Variation;

    std::vector<Density> members;
    members.reserve(n_list.size());
    for (int n : n_list) members.push_back(fam.member(n));

    bool members_positive = probed_positive(fam.limit, opts.measures);
    for (const Density& m : members) members_positive = members_positive && probed_positive(m, opts.measures);
    cert.hypotheses.push_back({"family-strictly-positive", members_positive,
                               members_positive
                                   ? "limit and members positive on the support"
                                   : "a density vanishes somewhere on the support"});

    const VariationBoundConstants c = variation_bound_constants(fam, n_list, opts);
    const double m_const = c.m;
    const double lsup = c.limit_log_sup;
    cert.constants["M"] = m_const;
    cert.constants["limit_log_density_sup"] = lsup;
    cert.hypotheses.push_back({"member-log-density-sup-finite", m_const <= opts.sup_cap,
                               "M = " + fmt(m_const)});
    cert.hypotheses.push_back({"limit-log-density-sup-finite", lsup <= opts.sup_cap,
                               "sup |log2 density| = " + fmt(lsup)});

    double entropy_coeff = kInf, kl_coeff = kInf;
    if (c.finite) {
        cert.constants["M_prime"] = c.m_prime;
        cert.constants["M_prime_density_exponent"] = c.m_prime_density_exponent;
        entropy_coeff = c.entropy_coeff;
        kl_coeff = c.kl_coeff;
        cert.constants["entropy_gap_coefficient"] = entropy_coeff;
        cert.constants["kl_coefficient"] = kl_coeff;
    }

    const RowInputs in{differential_entropy(fam.limit, opts.measures).value};
    bool bounds_hold = true;
    bool domination_ok = true;
    std::string domination_note;
    for (std::size_t k = 0; k < members.size(); ++k) {
        CertRow row;
        try {
            row = measure_row(n_list[k], members[k], fam.limit, in, opts);
        } catch (const DominationError& e) {
            domination_ok = false;
            domination_note = e.what();
            break;
        }
        if (std::isfinite(entropy_coeff)) {
            row.entropy_gap_bound = entropy_coeff * row.variation;
            row.kl_bound = kl_coeff * row.variation;
            row.bounds_hold = row.entropy_gap <= *row.entropy_gap_bound + opts.bound_slack &&
                              row.kl <= *row.kl_bound + opts.bound_slack;
            bounds_hold = bounds_hold && row.bounds_hold;
        }
        cert.rows.push_back(row);
    }
    if (!domination_ok)
        cert.hypotheses.push_back({"family-dominated", false, domination_note});

    if (!cert.hypotheses_met()) {
        cert.verdict = Verdict::HypothesisFailed;
        return cert;
    }
    cert.diagnostics.push_back({"per-n-bounds-hold", bounds_hold,
                                bounds_hold ? "every row satisfied both inequalities"
                                            : "an inequality was violated"});
    const CertRow& last = cert.rows.back();
    const double thr = opts.convergence_threshold;
    const bool converged = last.variation <= thr && last.entropy_gap <= thr && last.kl <= thr;
    cert.diagnostics.push_back(
        {"variation-vanishes", last.variation <= thr, "variation " + fmt(last.variation)});
    cert.verdict = (bounds_hold && converged) ? Verdict::Certified : Verdict::Inconclusive;
    return cert;
}

Certificate certify_thm3(const FamilySpec& fam, const std::vector<int>& n_list,
                         const CertifyOptions& opts) {
    assert_n_list(n_list);
    Certificate cert;
    cert.theorem = TheoremId::Thm3Pointwise;

    const MeasureValue h_limit = differential_entropy(fam.limit, opts.measures);
    cert.hypotheses.push_back({"limit-entropy-finite",
                               h_limit.verdict == Finiteness::Finite,
                               "H[limit] = " + fmt(h_limit.value)});

    std::vector<Density> members;
    members.reserve(n_list.size());
    for (int n : n_list) members.push_back(fam.member(n));

    bool domination_ok = true;
    std::string domination_note = "members vanish wherever the limit does";
    for (std::size_t k = 0; k < members.size() && domination_ok; ++k) {
        try {
            check_domination(members[k], fam.limit, opts.measures);
        } catch (const DominationError& e) {
            domination_ok = false;
            domination_note = e.what();
        }
    }
    cert.hypotheses.push_back({"family-dominated", domination_ok, domination_note});

    double ratio_sup = fam.ratio_sup.value_or(0.0);
    double xlogx_sup = 0.0, gap_sup = 0.0, final_gap = 0.0;
    std::vector<double> gaps(members.size(), 0.0);
    for (std::size_t k = 0; k < members.size(); ++k) {
        const RatioStats s = ratio_stats(members[k], fam.limit, opts.measures);
        ratio_sup = std::max(ratio_sup, s.sup);
        xlogx_sup = std::max(xlogx_sup, s.sup_xlogx);
        gap_sup = std::max(gap_sup, s.max_gap);
        gaps[k] = s.max_gap;
    }
    final_gap = gaps.empty() ? 0.0 : gaps.back();
    cert.constants["M"] = ratio_sup;
    cert.constants["M_prime"] = xlogx_sup;
    cert.constants["M_double_prime"] = gap_sup;
    cert.hypotheses.push_back({"ratio-sup-bounded", ratio_sup <= opts.sup_cap,
                               "M = " + fmt(ratio_sup)});
    cert.hypotheses.push_back({"pointwise-ratio-convergence",
                               final_gap <= opts.convergence_threshold,
                               "max |ratio - 1| at final n = " + fmt(final_gap)});

    if (domination_ok) {
        const RowInputs in{h_limit.value};
        for (std::size_t k = 0; k < members.size(); ++k) {
            CertRow row = measure_row(n_list[k], members[k], fam.limit, in, opts);
            row.ratio_gap = gaps[k];
            cert.rows.push_back(row);
        }
    }

    if (!cert.hypotheses_met()) {
        cert.verdict = Verdict::HypothesisFailed;
        return cert;
    }
    const CertRow& last = cert.rows.back();
    const double thr = opts.convergence_threshold;
    const bool scheffe = last.variation <= thr;
    cert.diagnostics.push_back(
        {"variation-vanishes", scheffe,
         "variation at final n = " + fmt(last.variation)});
    cert.verdict = (last.kl <= thr && last.entropy_gap <= thr && scheffe)
                       ? Verdict::Certified
                       : Verdict::Inconclusive;
    return cert;
}

Certificate certify_corollary(const FamilySpec& fam, const std::vector<int>& n_list,
                              const CertifyOptions& opts) {
    assert_n_list(n_list);
    const Certificate c1 = certify_thm1(fam, n_list, opts);
    const Certificate c2 = certify_thm2(fam, n_list, opts);

    Certificate cert;
    cert.theorem = TheoremId::CorollaryCombined;
    cert.hypotheses = c1.hypotheses;
    for (const auto& h : c2.hypotheses) {
        const bool dup = std::any_of(cert.hypotheses.begin(), cert.hypotheses.end(),
                                     [&](const HypothesisCheck& e) { return e.name == h.name; });
        if (!dup) cert.hypotheses.push_back(h);
    }
    cert.constants = c2.constants;
    cert.rows = c2.rows.empty() ? c1.rows : c2.rows;

    if (!cert.hypotheses_met()) {
        cert.verdict = Verdict::HypothesisFailed;
        return cert;
    }
    const CertRow& last = cert.rows.back();
    const double thr = opts.convergence_threshold;
    const bool weak_entropy = *last.kolmogorov <= thr && last.entropy_gap <= thr;
    const bool kl_vanishes = last.kl <= thr;
    const bool variation_vanishes = last.variation <= thr;
    const bool consistent =
        weak_entropy == kl_vanishes && kl_vanishes == variation_vanishes;
    cert.diagnostics.push_back({"weak-and-entropy-converged", weak_entropy, ""});
    cert.diagnostics.push_back({"kl-converged", kl_vanishes, ""});
    cert.diagnostics.push_back({"variation-converged", variation_vanishes, ""});
    cert.diagnostics.push_back({"columns-consistent", consistent,
                                consistent ? "all three columns agree at the final n"
                                           : "columns disagree at the final n"});
    cert.verdict = (weak_entropy && kl_vanishes && variation_vanishes)
                       ? Verdict::Certified
                       : Verdict::Inconclusive;
    return cert;
}

} // namespace entroconv
