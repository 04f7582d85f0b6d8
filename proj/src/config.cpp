#include "entroconv/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entroconv/errors.hpp"

namespace entroconv {

namespace {

using nlohmann::json;

std::vector<int> parse_n_values(const json& j, const char* key) {
    std::vector<int> out;
    if (!j.contains(key)) return out;
    const json& v = j.at(key);
    if (v.is_array() && v.size() == 2 && key == std::string("n_range")) {
        for (int n = v[0].get<int>(); n <= v[1].get<int>(); ++n) out.push_back(n);
        return out;
    }
    for (const auto& e : v) out.push_back(e.get<int>());
    return out;
}

InlineDensity parse_inline(const json& j) {
    InlineDensity d;
    for (const auto& e : j.at("breakpoints")) d.breakpoints.push_back(e.get<double>());
    for (const auto& e : j.at("values")) d.values.push_back(e.get<double>());
    return d;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("config is not valid JSON: ") + e.what());
    }
    RunConfig cfg;
    try {
        if (j.contains("scenario")) {
            const json& s = j.at("scenario");
            if (s.contains("name")) cfg.scenario.name = s.at("name").get<std::string>();
            if (s.contains("lambda")) cfg.scenario.params.lambda = s.at("lambda").get<double>();
            if (s.contains("parameter"))
                cfg.scenario.params.parameter = s.at("parameter").get<double>();
            if (s.contains("density")) cfg.scenario.density = parse_inline(s.at("density"));
            if (s.contains("reference")) cfg.scenario.reference = parse_inline(s.at("reference"));
        }
        if (cfg.scenario.name.empty() && !cfg.scenario.density)
            cfg.scenario.name = "counterexample";
        if (j.contains("tolerances")) {
            const json& t = j.at("tolerances");
            if (t.contains("tol")) cfg.tolerances.tol = t.at("tol").get<double>();
            if (t.contains("eps")) cfg.tolerances.eps = t.at("eps").get<double>();
            if (t.contains("divergence_cap"))
                cfg.tolerances.divergence_cap = t.at("divergence_cap").get<double>();
            if (t.contains("convergence_threshold"))
                cfg.tolerances.convergence_threshold =
                    t.at("convergence_threshold").get<double>();
            if (t.contains("max_intervals"))
                cfg.tolerances.max_intervals = t.at("max_intervals").get<std::size_t>();
        }
        if (j.contains("sweep")) {
            const json& s = j.at("sweep");
            cfg.sweep.n_values = parse_n_values(s, "n_range");
            if (cfg.sweep.n_values.empty()) cfg.sweep.n_values = parse_n_values(s, "n_list");
            if (s.contains("quantities")) {
                cfg.sweep.quantities_given = true;
                for (const auto& q : s.at("quantities"))
                    cfg.sweep.quantities.push_back(q.get<std::string>());
            }
        }
        if (j.contains("certify")) {
            const json& c = j.at("certify");
            if (c.contains("theorem")) cfg.certify.theorem = c.at("theorem").get<std::string>();
            cfg.certify.n_list = parse_n_values(c, "n_list");
            if (cfg.certify.n_list.empty()) cfg.certify.n_list = parse_n_values(c, "n_range");
        }
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ResolvedScenario resolve_scenario(const ScenarioConfig& sc) {
    ResolvedScenario out;
    if (sc.density) {
        Density member =
            Density::piecewise_constant(sc.density->breakpoints, sc.density->values);
        Density limit = sc.reference
                            ? Density::piecewise_constant(sc.reference->breakpoints,
                                                          sc.reference->values)
                            : Density::piecewise_constant(
                                  {sc.density->breakpoints.front(),
                                   sc.density->breakpoints.back()},
                                  {1.0 / (sc.density->breakpoints.back() -
                                          sc.density->breakpoints.front())});
        FamilySpec fam{std::move(limit), [member](int) { return member; }, {}, {}, {}, {}};
        out.continuous = ContinuousScenario{"inline", std::move(fam), GoldenForms{}};
        return out;
    }
    if (is_discrete_scenario(sc.name)) {
        out.discrete = make_discrete_scenario(sc.name, sc.params);
        return out;
    }
    const auto names = continuous_scenario_names();
    if (std::find(names.begin(), names.end(), sc.name) == names.end()) {
        std::ostringstream os;
        os << "unknown scenario '" << sc.name << "'; available:";
        for (const auto& n : continuous_scenario_names()) os << ' ' << n;
        for (const auto& n : discrete_scenario_names()) os << ' ' << n;
        throw ArgumentError(os.str());
    }
    out.continuous = make_continuous_scenario(sc.name, sc.params);
    return out;
}

MeasureOptions measure_options(const RunConfig& cfg) {
    MeasureOptions m;
    m.tol = cfg.tolerances.tol;
    m.divergence_cap = cfg.tolerances.divergence_cap;
    m.max_intervals = cfg.tolerances.max_intervals;
    m.seed = cfg.seed;
    return m;
}

DiscreteOptions discrete_options(const RunConfig& cfg) {
    DiscreteOptions d;
    d.eps = cfg.tolerances.eps;
    d.convergence_threshold = cfg.tolerances.convergence_threshold;
    return d;
}

CertifyOptions certify_options(const RunConfig& cfg) {
    CertifyOptions c;
    c.measures = measure_options(cfg);
    c.convergence_threshold = cfg.tolerances.convergence_threshold;
    return c;
}

} // namespace entroconv
