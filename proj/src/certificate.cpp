#include "entroconv/certificate.hpp"

namespace entroconv {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::HypothesisFailed: return "hypothesis-failed";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

const char* theorem_name(TheoremId t) {
    switch (t) {
    case TheoremId::Thm1Equivalence: return "thm1";
    case TheoremId::Thm2Variation: return "thm2";
    case TheoremId::Thm3Pointwise: return "thm3";
    case TheoremId::CorollaryCombined: return "corollary";
    case TheoremId::DiscretePointwise: return "discrete";
    }
    return "unknown";
}

} // namespace entroconv
