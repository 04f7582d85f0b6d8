#include "entroconv/cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entroconv/certifier.hpp"
#include "entroconv/errors.hpp"

namespace entroconv::cli {

namespace {

const std::vector<std::string> kSweepQuantities = {"entropy", "entropy_gap", "kl",
                                                   "variation", "kolmogorov"};

std::vector<int> default_sweep_n() {
    std::vector<int> out;
    for (int n = 1; n <= 16; ++n) out.push_back(n);
    return out;
}

std::vector<int> resolve_n_values(const CliOptions& opts, const std::vector<int>& from_config,
                                  std::vector<int> fallback) {
    if (opts.n_range) {
        std::vector<int> out;
        for (int n = opts.n_range->first; n <= opts.n_range->second; ++n) out.push_back(n);
        if (out.empty()) throw ArgumentError("empty n range");
        return out;
    }
    if (opts.n) return {*opts.n};
    if (!from_config.empty()) return from_config;
    return fallback;
}

bool wants(const std::vector<std::string>& quantities, const std::string& q) {
    return quantities.empty() ||
           std::find(quantities.begin(), quantities.end(), q) != quantities.end();
}

int verdict_exit(Verdict v) {
    switch (v) {
    case Verdict::Certified: return kExitOk;
    case Verdict::HypothesisFailed: return kExitHypothesisFailed;
    case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int finiteness_exit(Finiteness f) {
    return f == Finiteness::Finite ? kExitOk : kExitNotFinite;
}

void emit(const CliOptions& opts, const std::string& text, std::ostream& out) {
    if (opts.out_path.empty())
        out << text;
    else
        write_file(opts.out_path, text);
}

} // namespace

RunConfig effective_config(const CliOptions& opts) {
    RunConfig cfg =
        opts.config_path.empty() ? parse_config_text("{}") : load_config(opts.config_path);
    if (opts.tol) cfg.tolerances.tol = *opts.tol;
    if (opts.seed) cfg.seed = *opts.seed;
    return cfg;
}

std::vector<SweepRecord> run_sweep(const ResolvedScenario& scenario,
                                   const std::vector<int>& n_values,
                                   const std::vector<std::string>& quantities,
                                   const RunConfig& cfg) {
    for (const auto& q : quantities)
        if (std::find(kSweepQuantities.begin(), kSweepQuantities.end(), q) ==
            kSweepQuantities.end())
            throw ArgumentError("unknown quantity '" + q + "'");

    std::vector<SweepRecord> rows;
    rows.reserve(n_values.size());

    if (scenario.is_discrete()) {
        const DiscreteScenario& ds = *scenario.discrete;
        const DiscreteOptions dopts = discrete_options(cfg);
        const double h_limit = discrete_entropy(ds.limit, dopts).value;
        for (int n : n_values) {
            const DiscretePmf member = ds.member(n);
            SweepRecord r;
            r.n = n;
            const double h = discrete_entropy(member, dopts).value;
            if (wants(quantities, "entropy")) r.entropy = h;
            if (wants(quantities, "entropy_gap")) r.entropy_gap = std::fabs(h - h_limit);
            if (wants(quantities, "kl")) r.kl = discrete_kl(member, ds.limit, dopts).value;
            if (wants(quantities, "variation"))
                r.variation = discrete_variation(member, ds.limit, dopts).value;
            rows.push_back(r);
        }
        return rows;
    }

    const ContinuousScenario& cs = *scenario.continuous;
    const MeasureOptions mopts = measure_options(cfg);
    const CertifyOptions copts = certify_options(cfg);
    const double h_limit = differential_entropy(cs.family.limit, mopts).value;
    const VariationBoundConstants consts =
        variation_bound_constants(cs.family, n_values, copts);
    for (int n : n_values) {
        const Density member = cs.family.member(n);
        SweepRecord r;
        r.n = n;
        const MeasureValue h = differential_entropy(member, mopts);
        if (wants(quantities, "entropy")) r.entropy = h.value;
        if (wants(quantities, "entropy_gap")) r.entropy_gap = std::fabs(h.value - h_limit);
        if (wants(quantities, "kl")) r.kl = kl_divergence(member, cs.family.limit, mopts).value;
        if (wants(quantities, "variation"))
            r.variation = variation_distance(member, cs.family.limit, mopts).value;
        if (wants(quantities, "kolmogorov"))
            r.kolmogorov = kolmogorov_distance(member, cs.family.limit, mopts).value;
        if (consts.finite && r.variation) {
            r.bound_af3 = consts.entropy_coeff * *r.variation;
            r.bound_af4 = consts.kl_coeff * *r.variation;
            if (r.entropy_gap && r.kl)
                r.certified = *r.entropy_gap <= *r.bound_af3 + 1e-9 &&
                              *r.kl <= *r.bound_af4 + 1e-9;
        }
        rows.push_back(r);
    }
    return rows;
}

int cmd_measure(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig cfg = effective_config(opts);
        const ResolvedScenario scenario = resolve_scenario(cfg.scenario);
        const std::string q = opts.quantity.empty() ? "entropy" : opts.quantity;
        const int n = opts.n.value_or(1);

        MeasureValue v;
        if (scenario.is_discrete()) {
            const DiscreteScenario& ds = *scenario.discrete;
            const DiscreteOptions dopts = discrete_options(cfg);
            const DiscretePmf member = ds.member(n);
            if (q == "entropy")
                v = discrete_entropy(member, dopts);
            else if (q == "kl")
                v = discrete_kl(member, ds.limit, dopts);
            else if (q == "variation")
                v = discrete_variation(member, ds.limit, dopts);
            else
                throw ArgumentError("quantity '" + q + "' is not defined for discrete scenarios");
        } else {
            const ContinuousScenario& cs = *scenario.continuous;
            const MeasureOptions mopts = measure_options(cfg);
            const Density member = cs.family.member(n);
            if (q == "entropy")
                v = differential_entropy(member, mopts);
            else if (q == "kl")
                v = kl_divergence(member, cs.family.limit, mopts);
            else if (q == "variation")
                v = variation_distance(member, cs.family.limit, mopts);
            else if (q == "kolmogorov")
                v = kolmogorov_distance(member, cs.family.limit, mopts);
            else
                throw ArgumentError("unknown quantity '" + q + "'");
        }
        out << quantity_name(v.quantity) << " = " << format_double(v.value) << "\n"
            << "error_estimate = " << format_double(v.error_estimate) << "\n"
            << "verdict = " << finiteness_name(v.verdict) << "\n";
        return finiteness_exit(v.verdict);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_sweep(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig cfg = effective_config(opts);
        const bool explicit_quantities = !opts.quantities.empty() || cfg.sweep.quantities_given;
        std::vector<std::string> quantities =
            !opts.quantities.empty() ? opts.quantities : cfg.sweep.quantities;
        if (explicit_quantities && quantities.empty())
            throw ArgumentError("empty quantity list");
        if (opts.format != "csv" && opts.format != "json")
            throw ArgumentError("format must be csv or json");

        const ResolvedScenario scenario = resolve_scenario(cfg.scenario);
        const std::vector<int> n_values =
            resolve_n_values(opts, cfg.sweep.n_values, default_sweep_n());
        const std::vector<SweepRecord> rows = run_sweep(scenario, n_values, quantities, cfg);
        emit(opts, opts.format == "csv" ? sweep_to_csv(rows) : sweep_to_json(rows), out);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_certify(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig cfg = effective_config(opts);
        const std::string theorem =
            !opts.theorem.empty() ? opts.theorem : cfg.certify.theorem;
        if (theorem.empty())
            throw ArgumentError("certify requires a theorem "
                                "(thm1, thm2, thm3, corollary, discrete)");
        const std::vector<int> n_values =
            resolve_n_values(opts, cfg.certify.n_list, {4, 16, 64, 256, 1024});
        const ResolvedScenario scenario = resolve_scenario(cfg.scenario);

        Certificate cert;
        if (theorem == "discrete") {
            if (!scenario.is_discrete())
                throw ArgumentError("theorem 'discrete' needs a discrete scenario");
            const DiscreteScenario& ds = *scenario.discrete;
            cert = certify_discrete_pointwise(ds.member, ds.limit, n_values,
                                              discrete_options(cfg), ds.hints);
        } else {
            if (scenario.is_discrete())
                throw ArgumentError("theorem '" + theorem +
                                    "' needs a continuous scenario");
            const CertifyOptions copts = certify_options(cfg);
            const FamilySpec& fam = scenario.continuous->family;
            if (theorem == "thm1")
                cert = certify_thm1(fam, n_values, copts);
            else if (theorem == "thm2")
                cert = certify_thm2(fam, n_values, copts);
            else if (theorem == "thm3")
                cert = certify_thm3(fam, n_values, copts);
            else if (theorem == "corollary")
                cert = certify_corollary(fam, n_values, copts);
            else
                throw ArgumentError("unknown theorem '" + theorem + "'");
        }
        emit(opts,
             opts.format == "json" ? certificate_to_json_text(cert)
                                   : certificate_to_text(cert),
             out);
        return verdict_exit(cert.verdict);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_counterexample(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        RunConfig cfg = effective_config(opts);
        cfg.scenario = ScenarioConfig{};
        cfg.scenario.name = "counterexample";
        const ResolvedScenario scenario = resolve_scenario(cfg.scenario);
        const std::vector<int> n_values = resolve_n_values(opts, {}, default_sweep_n());
        const std::vector<SweepRecord> rows = run_sweep(scenario, n_values, {}, cfg);

        bool golden_ok = true;
        const GoldenForms& golden = scenario.continuous->golden;
        for (const SweepRecord& r : rows) {
            const double nd = static_cast<double>(r.n);
            golden_ok = golden_ok &&
                        std::fabs(*r.entropy - golden.entropy(r.n)) <= 1e-12 &&
                        std::fabs(*r.kl - golden.kl(r.n)) <= 1e-12 &&
                        std::fabs(*r.variation - golden.variation(r.n)) <= 1e-12 &&
                        *r.kolmogorov <= golden.kolmogorov_bound(r.n) + 1e-12;
            (void)nd;
        }
        const std::string table =
            opts.format == "json" ? sweep_to_json(rows) : sweep_to_csv(rows);
        emit(opts, table, out);
        out << "golden-check: " << (golden_ok ? "ok" : "MISMATCH") << "\n";
        return golden_ok ? kExitOk : kExitInconclusive;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_selftest(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    try {
        const RunConfig cfg = effective_config(opts);

        // golden-validated constructions (each throws on mismatch)
        for (const std::string& name : continuous_scenario_names()) {
            try {
                make_continuous_scenario(name);
                check("scenario " + name, true);
            } catch (const Error& e) {
                err << e.what() << "\n";
                check("scenario " + name, false);
            }
        }
        for (const std::string& name : discrete_scenario_names()) {
            try {
                make_discrete_scenario(name);
                check("scenario " + name, true);
            } catch (const Error& e) {
                err << e.what() << "\n";
                check("scenario " + name, false);
            }
        }

        // closed forms at a few n beyond the construction set
        {
            const ContinuousScenario s = make_continuous_scenario("counterexample");
            bool ok = true;
            for (int n : {5, 12, 27}) {
                const Density m = s.family.member(n);
                ok = ok && std::fabs(differential_entropy(m).value - s.golden.entropy(n)) <= 1e-11;
                ok = ok && std::fabs(kl_divergence(m, s.family.limit).value - s.golden.kl(n)) <= 1e-11;
            }
            check("counterexample closed forms", ok);
        }

        // discrete golden values
        {
            const double h = discrete_entropy(DiscretePmf::geometric(0.5)).value;
            check("geometric entropy", std::fabs(h - 2.0) <= 1e-10);
            const double kl =
                discrete_kl(DiscretePmf::bernoulli(0.5), DiscretePmf::bernoulli(0.25)).value;
            check("bernoulli kl", std::fabs(kl - 0.20751874963942190) <= 1e-12);
        }

        // Pinsker on the built-in families
        {
            bool ok = true;
            const ContinuousScenario s = make_continuous_scenario("two-cell");
            for (int n : {1, 2, 4, 8, 16}) {
                const PinskerCheck p = pinsker_check(s.family.member(n), s.family.limit);
                ok = ok && p.holds;
            }
            check("pinsker two-cell", ok);
        }

        // certificates behave as expected on the built-ins
        {
            const ContinuousScenario two = make_continuous_scenario("two-cell");
            const ContinuousScenario ce = make_continuous_scenario("counterexample");
            const std::vector<int> ns = {4, 16, 64, 256, 1024};
            const CertifyOptions copts = certify_options(cfg);
            check("two-cell thm2 certified",
                  certify_thm2(two.family, ns, copts).verdict == Verdict::Certified);
            check("counterexample thm2 rejected",
                  certify_thm2(ce.family, {2, 4, 8}, copts).verdict ==
                      Verdict::HypothesisFailed);
            check("counterexample thm3 rejected",
                  certify_thm3(ce.family, {2, 4, 8}, copts).verdict ==
                      Verdict::HypothesisFailed);
        }

        // byte-identical sweep reruns
        {
            RunConfig sweep_cfg = cfg;
            sweep_cfg.scenario.name = "counterexample";
            const ResolvedScenario sc = resolve_scenario(sweep_cfg.scenario);
            const std::vector<int> ns = default_sweep_n();
            const std::string a = sweep_to_csv(run_sweep(sc, ns, {}, sweep_cfg));
            const std::string b = sweep_to_csv(run_sweep(sc, ns, {}, sweep_cfg));
            check("sweep determinism", a == b);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? kExitOk : kExitInconclusive;
}

} // namespace entroconv::cli
