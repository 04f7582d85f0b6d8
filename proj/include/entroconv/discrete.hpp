#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "entroconv/certificate.hpp"
#include "entroconv/measures.hpp"

namespace entroconv {

/// Upper bound on the mass beyond a cutoff: tail(N) >= sum_{i>N} p_i.
/// Must be nonincreasing with limit 0. Geometric tails coeff * ratio^N get
/// closed-form entropy tail bounds; generic tails are summed directly.
class TailBound {
public:
    struct GeometricForm {
        double coeff = 1.0;
        double ratio = 0.5; // in (0,1)
    };

    static TailBound geometric(double coeff, double ratio);
    static TailBound from_function(std::function<double(std::int64_t)> mass_after);

    double mass_after(std::int64_t n) const;
    const std::optional<GeometricForm>& geometric_form() const { return geom_; }

    /// Upper bound on sum_{i>N} p_i * (-log2 p_i). Valid because
    /// p_i <= mass_after(i-1) and -x log2 x is increasing on (0, 1/e];
    /// returns +inf when mass_after(N) > 1/e.
    double entropy_tail_bound(std::int64_t n) const;

private:
    TailBound() = default;
    std::function<double(std::int64_t)> fn_;
    std::optional<GeometricForm> geom_;
};

/// Probability mass function over the 1-based index alphabet {1, 2, ...}.
/// Finite PMFs are explicit arrays (prob(i) = 0 past the end); infinite
/// PMFs pair a generator with a mandatory tail bound.
class DiscretePmf {
public:
    static DiscretePmf finite(std::vector<double> probs, double normalization_tol = 1e-12);
    static DiscretePmf bernoulli(double p); // {p, 1-p}
    static DiscretePmf geometric(double theta); // p_i = theta (1-theta)^{i-1}

    /// Infinite-support PMF from a generator. The tail bound is required;
    /// partial sums plus the bound must bracket 1 at the probed cutoffs.
    static DiscretePmf infinite(std::function<double(std::int64_t)> prob, TailBound tail);

    bool has_finite_support() const { return finite_size_ >= 0; }
    std::int64_t finite_size() const { return finite_size_; }
    double prob(std::int64_t i) const;
    const TailBound& tail() const;

private:
    DiscretePmf() = default;
    std::vector<double> probs_;
    std::function<double(std::int64_t)> gen_;
    std::optional<TailBound> tail_;
    std::int64_t finite_size_ = -1;
};

struct TruncationPlan {
    std::int64_t cutoff = 0;
    double tail_mass = 0.0;
    double tail_entropy_bound = 0.0;
};

/// Cutoff N with mass_after(N) <= eps/4 and entropy tail bound <= eps/4.
TruncationPlan plan_truncation(const DiscretePmf& p, double eps);

struct DiscreteOptions {
    double eps = 1e-10;                  // truncation residual budget
    double ratio_cap = 1e6;              // "unbounded" ratio threshold
    double convergence_threshold = 1e-3; // "-> 0" verdicts at the final n
};

/// Shannon entropy -sum p_i log2 p_i in bits. Exact summation for finite
/// support; truncated with residual <= eps otherwise.
MeasureValue discrete_entropy(const DiscretePmf& p, const DiscreteOptions& opts = {});

/// KL discriminant sum p_i log2(p_i/q_i) in bits; throws DominationError
/// naming the first index where num is positive but den vanishes.
MeasureValue discrete_kl(const DiscretePmf& num, const DiscretePmf& den,
                         const DiscreteOptions& opts = {});

/// Variation distance sum |p_i - q_i|, in [0,2].
MeasureValue discrete_variation(const DiscretePmf& p, const DiscretePmf& q,
                                const DiscreteOptions& opts = {});

struct EquivalenceRow {
    int n = 0;
    double coordinate_gap = 0.0; // max_i |p^n_i - p_i| over probed indices
    double variation = 0.0;
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;
    std::int64_t probed_indices = 0;
    double tail_masses = 0.0; // max of member/limit tails at the probe cutoff
    bool bound_holds = false; // variation <= gap * probed + 2 * tails at every n
    bool co_vanish = false;   // at final n both columns are below threshold together
    bool consistent = false;  // bound_holds && co_vanish
};

/// Per-n comparison of the coordinatewise sup gap against the variation
/// distance; the two must vanish together for the verdict to hold.
EquivalenceReport equivalence_diagnostic(const std::function<DiscretePmf(int)>& family,
                                         const DiscretePmf& limit,
                                         const std::vector<int>& n_list,
                                         const DiscreteOptions& opts = {});

struct DiscreteFamilyHints {
    std::optional<std::int64_t> worst_ratio_index; // index achieving the ratio sup
    std::optional<double> ratio_sup;               // declared sup_{n,i} p^n_i / p_i
};

/// Countable-alphabet pointwise certificate: checks coordinatewise
/// convergence on the positive-mass index set and the boundedness of the
/// probability ratios, then reports per-n KL and entropy gaps. An unbounded
/// running ratio yields a hypothesis-failed verdict, not an exception.
Certificate certify_discrete_pointwise(const std::function<DiscretePmf(int)>& family,
                                       const DiscretePmf& limit,
                                       const std::vector<int>& n_list,
                                       const DiscreteOptions& opts = {},
                                       const DiscreteFamilyHints& hints = {});

} // namespace entroconv
