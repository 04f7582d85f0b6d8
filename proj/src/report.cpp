#include "entroconv/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entroconv/errors.hpp"

namespace entroconv {

namespace {

using nlohmann::json;

json opt_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    if (std::isnan(*v)) return "nan";
    if (std::isinf(*v)) return *v > 0 ? "infinity" : "-infinity";
    return *v;
}

json number_json(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
    return v;
}

json checks_json(const std::vector<HypothesisCheck>& checks) {
    json arr = json::array();
    for (const auto& h : checks)
        arr.push_back({{"name", h.name}, {"passed", h.passed}, {"diagnostic", h.diagnostic}});
    return arr;
}

json rows_json(const std::vector<CertRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row = {{"n", r.n},
                    {"entropy_gap", r.entropy_gap},
                    {"kl", r.kl},
                    {"variation", r.variation},
                    {"bounds_hold", r.bounds_hold}};
        row["kolmogorov"] = opt_json(r.kolmogorov);
        row["ratio_gap"] = opt_json(r.ratio_gap);
        row["entropy_gap_bound"] = opt_json(r.entropy_gap_bound);
        row["kl_bound"] = opt_json(r.kl_bound);
        arr.push_back(row);
    }
    return arr;
}

} // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string sweep_to_csv(const std::vector<SweepRecord>& rows) {
    std::ostringstream os;
    os << "n,entropy,entropy_gap,kl,variation,kolmogorov,bound_af3,bound_af4,certified\n";
    auto cell = [&os](const std::optional<double>& v) {
        os << ',';
        if (v) os << format_double(*v);
    };
    for (const auto& r : rows) {
        os << r.n;
        cell(r.entropy);
        cell(r.entropy_gap);
        cell(r.kl);
        cell(r.variation);
        cell(r.kolmogorov);
        cell(r.bound_af3);
        cell(r.bound_af4);
        os << ',';
        if (r.certified) os << (*r.certified ? "true" : "false");
        os << '\n';
    }
    return os.str();
}

std::string sweep_to_json(const std::vector<SweepRecord>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row;
        row["n"] = r.n;
        row["entropy"] = opt_json(r.entropy);
        row["entropy_gap"] = opt_json(r.entropy_gap);
        row["kl"] = opt_json(r.kl);
        row["variation"] = opt_json(r.variation);
        row["kolmogorov"] = opt_json(r.kolmogorov);
        row["bound_af3"] = opt_json(r.bound_af3);
        row["bound_af4"] = opt_json(r.bound_af4);
        row["certified"] = r.certified ? json(*r.certified) : json(nullptr);
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream os;
    os << "certificate: " << theorem_name(cert.theorem) << "\n";
    os << "verdict: " << verdict_name(cert.verdict) << "\n";
    if (!cert.constants.empty()) {
        os << "constants:\n";
        for (const auto& [k, v] : cert.constants)
            os << "  " << k << " = " << format_double(v) << "\n";
    }
    os << "hypotheses:\n";
    for (const auto& h : cert.hypotheses)
        os << "  [" << (h.passed ? "pass" : "FAIL") << "] " << h.name << ": " << h.diagnostic
           << "\n";
    for (const auto& h : cert.diagnostics)
        os << "  [" << (h.passed ? "yes " : "no  ") << "] " << h.name
           << (h.diagnostic.empty() ? "" : ": " + h.diagnostic) << "\n";
    if (!cert.rows.empty()) {
        os << "rows (n, entropy_gap, kl, variation";
        const bool has_k = cert.rows.front().kolmogorov.has_value();
        const bool has_b = cert.rows.front().entropy_gap_bound.has_value();
        const bool has_r = cert.rows.front().ratio_gap.has_value();
        if (has_k) os << ", kolmogorov";
        if (has_r) os << ", ratio_gap";
        if (has_b) os << ", entropy_gap_bound, kl_bound";
        os << "):\n";
        for (const auto& r : cert.rows) {
            os << "  " << r.n << ", " << format_double(r.entropy_gap) << ", "
               << format_double(r.kl) << ", " << format_double(r.variation);
            if (r.kolmogorov) os << ", " << format_double(*r.kolmogorov);
            if (r.ratio_gap) os << ", " << format_double(*r.ratio_gap);
            if (r.entropy_gap_bound)
                os << ", " << format_double(*r.entropy_gap_bound) << ", "
                   << format_double(*r.kl_bound);
            os << "\n";
        }
    }
    return os.str();
}

std::string certificate_to_json_text(const Certificate& cert) {
    json j;
    j["theorem"] = theorem_name(cert.theorem);
    j["verdict"] = verdict_name(cert.verdict);
    json constants;
    for (const auto& [k, v] : cert.constants) constants[k] = number_json(v);
    j["constants"] = constants;
    j["hypotheses"] = checks_json(cert.hypotheses);
    j["diagnostics"] = checks_json(cert.diagnostics);
    j["rows"] = rows_json(cert.rows);
    return j.dump(2) + "\n";
}

const char* quantity_name(Quantity q) {
    switch (q) {
    case Quantity::Entropy: return "entropy";
    case Quantity::Kl: return "kl";
    case Quantity::Variation: return "variation";
    case Quantity::Kolmogorov: return "kolmogorov";
    }
    return "unknown";
}

const char* finiteness_name(Finiteness f) {
    switch (f) {
    case Finiteness::Finite: return "finite";
    case Finiteness::Diverged: return "diverged";
    case Finiteness::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

} // namespace entroconv
