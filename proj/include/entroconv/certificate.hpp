#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace entroconv {

enum class Verdict { Certified, HypothesisFailed, Inconclusive };

enum class TheoremId {
    Thm1Equivalence,   // KL-vanishing equivalent to weak + entropy convergence
    Thm2Variation,     // variation convergence route with explicit constants
    Thm3Pointwise,     // pointwise density-ratio route
    CorollaryCombined, // three-way equivalence under combined hypotheses
    DiscretePointwise  // countable-alphabet pointwise route
};

const char* verdict_name(Verdict v);
const char* theorem_name(TheoremId t);

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string diagnostic;
};

struct CertRow {
    int n = 0;
    double entropy_gap = 0.0; // |H[mu_n] - H[mu]|
    double kl = 0.0;
    double variation = 0.0;
    std::optional<double> kolmogorov;       // continuous families only
    std::optional<double> ratio_gap;        // max |d mu_n/d mu - 1| over probes
    std::optional<double> entropy_gap_bound; // constant * L1 distance
    std::optional<double> kl_bound;          // constant * L1 distance
    bool bounds_hold = true;
};

struct Certificate {
    TheoremId theorem = TheoremId::Thm1Equivalence;
    std::map<std::string, double> constants; // M, M_prime, ...
    std::vector<HypothesisCheck> hypotheses;
    std::vector<HypothesisCheck> diagnostics; // consistency observations; do not gate
    std::vector<CertRow> rows;
    Verdict verdict = Verdict::Inconclusive;

    bool hypotheses_met() const {
        for (const auto& h : hypotheses)
            if (!h.passed) return false;
        return true;
    }
};

} // namespace entroconv
