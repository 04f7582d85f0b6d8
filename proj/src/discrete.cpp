#include "entroconv/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "entroconv/errors.hpp"

namespace entroconv {

namespace {

constexpr double kInvE = 0.36787944117144233; // 1/e
constexpr double kLog2E = 1.4426950408889634;

double neumaier_sum(const std::vector<double>& terms) {
    double sum = 0.0, comp = 0.0;
    for (double term : terms) {
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double nlog2(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

} // namespace

// ---------------------------------------------------------------------------
// TailBound

TailBound TailBound::geometric(double coeff, double ratio) {
    if (!(coeff > 0.0) || !std::isfinite(coeff))
        throw ConstructionError("geometric tail coefficient must be positive");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw ConstructionError("geometric tail ratio must lie in (0,1)");
    TailBound t;
    t.geom_ = GeometricForm{coeff, ratio};
    return t;
}

TailBound TailBound::from_function(std::function<double(std::int64_t)> mass_after) {
    if (!mass_after)
        throw ConstructionError("tail bound requires a function");
    // probe monotonicity and decay
    double prev = mass_after(1);
    for (std::int64_t n = 2; n <= 4096; n *= 2) {
        const double cur = mass_after(n);
        if (cur < 0.0 || cur > prev + 1e-15)
            throw ConstructionError("tail bound must be nonnegative and nonincreasing");
        prev = cur;
    }
    TailBound t;
    t.fn_ = std::move(mass_after);
    return t;
}

double TailBound::mass_after(std::int64_t n) const {
    if (geom_) return geom_->coeff * std::pow(geom_->ratio, static_cast<double>(n));
    return fn_(n);
}

double TailBound::entropy_tail_bound(std::int64_t n) const {
    const double head = mass_after(n);
    if (head > kInvE) return std::numeric_limits<double>::infinity();
    if (head == 0.0) return 0.0;
    if (geom_) {
        // sum_{j>=N} -C r^j log2(C r^j), split into the log2(C) and j*log2(r) parts
        const double c = geom_->coeff, r = geom_->ratio;
        const double rn = std::pow(r, static_cast<double>(n));
        const double geom_sum = rn / (1.0 - r);
        const double weighted_sum =
            rn * (static_cast<double>(n) * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r));
        return -c * std::log2(c) * geom_sum - c * std::log2(r) * weighted_sum;
    }
    double total = 0.0;
    for (std::int64_t j = n; j < n + 10'000'000; ++j) {
        const double term = nlog2(fn_(j));
        total += term;
        if (term < 1e-18 * (total + 1e-300)) return total;
    }
    throw Error("generic tail bound decays too slowly for an entropy tail estimate");
}

// ---------------------------------------------------------------------------
// DiscretePmf

DiscretePmf DiscretePmf::finite(std::vector<double> probs, double normalization_tol) {
    if (probs.empty())
        throw ConstructionError("finite PMF needs at least one probability");
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0) || !std::isfinite(p))
            throw ConstructionError("probabilities must lie in [0,1]");
    }
    std::vector<double> terms = probs;
    const double total = neumaier_sum(terms);
    if (std::fabs(total - 1.0) > normalization_tol) {
        std::ostringstream os;
        os << "finite PMF sums to " << total << ", expected 1 within " << normalization_tol;
        throw ConstructionError(os.str());
    }
    DiscretePmf p;
    p.finite_size_ = static_cast<std::int64_t>(probs.size());
    p.probs_ = std::move(probs);
    return p;
}

DiscretePmf DiscretePmf::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConstructionError("Bernoulli parameter must lie in [0,1]");
    return finite({p, 1.0 - p});
}

DiscretePmf DiscretePmf::geometric(double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw ConstructionError("geometric parameter must lie in (0,1)");
    return infinite(
        [theta](std::int64_t i) {
            return theta * std::pow(1.0 - theta, static_cast<double>(i - 1));
        },
        TailBound::geometric(1.0, 1.0 - theta));
}

DiscretePmf DiscretePmf::infinite(std::function<double(std::int64_t)> prob, TailBound tail) {
    if (!prob)
        throw ConstructionError("infinite PMF requires a generator");
    // partial sum + tail must bracket 1 at the probed cutoffs
    double partial = 0.0;
    std::int64_t i = 1;
    for (std::int64_t cutoff : {16, 256, 4096}) {
        for (; i <= cutoff; ++i) {
            const double p = prob(i);
            if (!(p >= 0.0 && p <= 1.0) || !std::isfinite(p))
                throw ConstructionError("probabilities must lie in [0,1]");
            partial += p;
        }
        const double upper = partial + tail.mass_after(cutoff);
        if (partial > 1.0 + 1e-9 || upper < 1.0 - 1e-9) {
            std::ostringstream os;
            os << "partial sum " << partial << " and tail bound " << tail.mass_after(cutoff)
               << " at cutoff " << cutoff << " do not bracket 1";
            throw ConstructionError(os.str());
        }
    }
    DiscretePmf p;
    p.gen_ = std::move(prob);
    p.tail_ = std::move(tail);
    return p;
}

double DiscretePmf::prob(std::int64_t i) const {
    if (i < 1)
        throw ArgumentError("PMF indices are 1-based");
    if (has_finite_support())
        return i <= finite_size_ ? probs_[static_cast<std::size_t>(i - 1)] : 0.0;
    return gen_(i);
}

const TailBound& DiscretePmf::tail() const {
    if (!tail_)
        throw ArgumentError("finite PMF carries no tail bound");
    return *tail_;
}

// ---------------------------------------------------------------------------
// Truncation

TruncationPlan plan_truncation(const DiscretePmf& p, double eps) {
    if (!(eps > 0.0))
        throw ArgumentError("truncation budget must be positive");
    TruncationPlan plan;
    if (p.has_finite_support()) {
        plan.cutoff = p.finite_size();
        return plan;
    }
    const TailBound& tail = p.tail();
    const double budget = eps / 4.0;
    std::int64_t n = 8;
    while (tail.mass_after(n) > budget || tail.entropy_tail_bound(n) > budget) {
        n *= 2;
        if (n > (std::int64_t{1} << 40))
            throw Error("tail bound too weak to reach the requested truncation budget");
    }
    // shrink back toward the smallest admissible cutoff
    std::int64_t lo = n / 2, hi = n;
    while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (tail.mass_after(mid) <= budget && tail.entropy_tail_bound(mid) <= budget)
            hi = mid;
        else
            lo = mid;
    }
    plan.cutoff = hi;
    plan.tail_mass = tail.mass_after(hi);
    plan.tail_entropy_bound = tail.entropy_tail_bound(hi);
    return plan;
}

// ---------------------------------------------------------------------------
// Information measures

MeasureValue discrete_entropy(const DiscretePmf& p, const DiscreteOptions& opts) {
    MeasureValue out;
    out.quantity = Quantity::Entropy;
    const TruncationPlan plan = plan_truncation(p, opts.eps);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(std::min<std::int64_t>(plan.cutoff, 1 << 20)));
    for (std::int64_t i = 1; i <= plan.cutoff; ++i) terms.push_back(nlog2(p.prob(i)));
    out.value = neumaier_sum(terms);
    out.error_estimate = plan.tail_entropy_bound;
    return out;
}

MeasureValue discrete_kl(const DiscretePmf& num, const DiscretePmf& den,
                         const DiscreteOptions& opts) {
    MeasureValue out;
    out.quantity = Quantity::Kl;
    const TruncationPlan pn = plan_truncation(num, opts.eps);
    const TruncationPlan pd = plan_truncation(den, opts.eps);
    const std::int64_t cutoff = std::max(pn.cutoff, pd.cutoff);

    std::vector<double> terms;
    double max_ratio = 0.0;
    for (std::int64_t i = 1; i <= cutoff; ++i) {
        const double p = num.prob(i);
        if (p <= 0.0) continue; // 0 log(0/0) = 0
        const double q = den.prob(i);
        if (q <= 0.0) {
            std::ostringstream os;
            os << "domination violated at index " << i
               << ": numerator positive, denominator zero";
            throw DominationError(os.str());
        }
        max_ratio = std::max(max_ratio, p / q);
        terms.push_back(p * std::log2(p / q));
    }
    out.value = neumaier_sum(terms);
    // tail: p_i log2(p_i/q_i) <= p_i log2(max ratio) from above and
    // >= -log2(e) (q_i - p_i) from log x <= x - 1
    const double t_num = num.has_finite_support() ? 0.0 : num.tail().mass_after(cutoff);
    const double t_den = den.has_finite_support() ? 0.0 : den.tail().mass_after(cutoff);
    out.error_estimate =
        t_num * std::max(0.0, std::log2(std::max(max_ratio, 1.0))) + kLog2E * (t_den + t_num);
    return out;
}

MeasureValue discrete_variation(const DiscretePmf& p, const DiscretePmf& q,
                                const DiscreteOptions& opts) {
    MeasureValue out;
    out.quantity = Quantity::Variation;
    const std::int64_t cutoff =
        std::max(plan_truncation(p, opts.eps).cutoff, plan_truncation(q, opts.eps).cutoff);
    std::vector<double> terms;
    for (std::int64_t i = 1; i <= cutoff; ++i)
        terms.push_back(std::fabs(p.prob(i) - q.prob(i)));
    out.value = neumaier_sum(terms);
    const double t_p = p.has_finite_support() ? 0.0 : p.tail().mass_after(cutoff);
    const double t_q = q.has_finite_support() ? 0.0 : q.tail().mass_after(cutoff);
    out.error_estimate = t_p + t_q;
    return out;
}

// ---------------------------------------------------------------------------
// Convergence diagnostics

EquivalenceReport equivalence_diagnostic(const std::function<DiscretePmf(int)>& family,
                                         const DiscretePmf& limit,
                                         const std::vector<int>& n_list,
                                         const DiscreteOptions& opts) {
    if (n_list.empty())
        throw ArgumentError("equivalence_diagnostic: empty n list");
    EquivalenceReport report;

    std::int64_t cutoff = plan_truncation(limit, opts.eps).cutoff;
    std::vector<DiscretePmf> members;
    members.reserve(n_list.size());
    for (int n : n_list) {
        members.push_back(family(n));
        cutoff = std::max(cutoff, plan_truncation(members.back(), opts.eps).cutoff);
    }
    report.probed_indices = cutoff;
    const double t_limit =
        limit.has_finite_support() ? 0.0 : limit.tail().mass_after(cutoff);

    report.bound_holds = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
        const DiscretePmf& m = members[k];
        double gap = 0.0;
        for (std::int64_t i = 1; i <= cutoff; ++i)
            gap = std::max(gap, std::fabs(m.prob(i) - limit.prob(i)));
        const double variation = discrete_variation(m, limit, opts).value;
        const double t_member = m.has_finite_support() ? 0.0 : m.tail().mass_after(cutoff);
        const double tails = std::max(t_member, t_limit);
        report.tail_masses = std::max(report.tail_masses, tails);
        if (variation > gap * static_cast<double>(cutoff) + 2.0 * tails + 1e-12)
            report.bound_holds = false;
        report.rows.push_back(EquivalenceRow{n_list[k], gap, variation});
    }
    const EquivalenceRow& last = report.rows.back();
    report.co_vanish = (last.variation <= opts.convergence_threshold) ==
                       (last.coordinate_gap <= opts.convergence_threshold);
    report.consistent = report.bound_holds && report.co_vanish;
    return report;
}

Certificate certify_discrete_pointwise(const std::function<DiscretePmf(int)>& family,
                                       const DiscretePmf& limit,
                                       const std::vector<int>& n_list,
                                       const DiscreteOptions& opts,
                                       const DiscreteFamilyHints& hints) {
    if (n_list.empty())
        throw ArgumentError("certify_discrete_pointwise: empty n list");
    Certificate cert;
    cert.theorem = TheoremId::DiscretePointwise;

    const MeasureValue limit_entropy = discrete_entropy(limit, opts);
    {
        std::ostringstream os;
        os.precision(12);
        os << "H[limit] = " << limit_entropy.value;
        cert.hypotheses.push_back(
            {"limit-entropy-finite", limit_entropy.verdict == Finiteness::Finite, os.str()});
    }

    std::int64_t cutoff = plan_truncation(limit, opts.eps).cutoff;
    std::vector<DiscretePmf> members;
    members.reserve(n_list.size());
    for (int n : n_list) {
        members.push_back(family(n));
        cutoff = std::max(cutoff, plan_truncation(members.back(), opts.eps).cutoff);
    }

    // domination and the ratio sup over the probed index range
    bool dominated = true;
    std::string domination_note = "members vanish wherever the limit does";
    double ratio_sup = hints.ratio_sup.value_or(0.0);
    bool ratio_capped = false;
    for (std::size_t k = 0; k < members.size() && dominated; ++k) {
        const DiscretePmf& m = members[k];
        std::vector<std::int64_t> extra;
        if (hints.worst_ratio_index) extra.push_back(*hints.worst_ratio_index);
        for (std::int64_t i = 1; i <= cutoff && dominated; ++i) {
            const double q = limit.prob(i);
            const double p = m.prob(i);
            if (q <= 0.0) {
                if (p > 0.0) {
                    dominated = false;
                    std::ostringstream os;
                    os << "member n=" << n_list[k] << " has mass at index " << i
                       << " outside the limit support";
                    domination_note = os.str();
                }
                continue;
            }
            ratio_sup = std::max(ratio_sup, p / q);
            if (ratio_sup > opts.ratio_cap) {
                ratio_capped = true;
                break;
            }
        }
        for (std::int64_t i : extra) {
            const double q = limit.prob(i);
            if (q > 0.0) ratio_sup = std::max(ratio_sup, m.prob(i) / q);
        }
        if (ratio_capped) break;
    }
    cert.hypotheses.push_back({"family-dominated", dominated, domination_note});
    {
        std::ostringstream os;
        if (ratio_capped)
            os << "running ratio sup exceeded the cap " << opts.ratio_cap;
        else
            os << "sup over probed (n, i) of p^n_i / p_i = " << ratio_sup;
        cert.hypotheses.push_back({"ratio-sup-bounded", !ratio_capped, os.str()});
    }
    cert.constants["M"] = ratio_sup;

    // coordinatewise convergence on the positive-mass index set
    double final_gap = 0.0;
    if (dominated && !ratio_capped) {
        for (std::size_t k = 0; k < members.size(); ++k) {
            const DiscretePmf& m = members[k];
            double gap = 0.0;
            for (std::int64_t i = 1; i <= cutoff; ++i) {
                if (limit.prob(i) <= 0.0) continue;
                gap = std::max(gap, std::fabs(m.prob(i) - limit.prob(i)));
            }
            if (k + 1 == members.size()) final_gap = gap;
            CertRow row;
            row.n = n_list[k];
            row.ratio_gap = gap;
            row.kl = discrete_kl(m, limit, opts).value;
            row.entropy_gap = std::fabs(discrete_entropy(m, opts).value - limit_entropy.value);
            row.variation = discrete_variation(m, limit, opts).value;
            cert.rows.push_back(row);
        }
    }
    {
        std::ostringstream os;
        os << "max coordinate gap at final n = " << final_gap;
        cert.hypotheses.push_back({"coordinatewise-convergence",
                                   dominated && !ratio_capped &&
                                       final_gap <= opts.convergence_threshold,
                                   os.str()});
    }

    if (!cert.hypotheses_met()) {
        cert.verdict = Verdict::HypothesisFailed;
        return cert;
    }
    const CertRow& last = cert.rows.back();
    cert.verdict = (last.kl <= opts.convergence_threshold &&
                    last.entropy_gap <= opts.convergence_threshold)
                       ? Verdict::Certified
                       : Verdict::Inconclusive;
    return cert;
}

} // namespace entroconv
