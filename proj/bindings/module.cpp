#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entroconv/certifier.hpp"
#include "entroconv/config.hpp"
#include "entroconv/report.hpp"
#include "entroconv/scenarios.hpp"

namespace py = pybind11;
using namespace entroconv;

namespace {

py::dict measure_dict(const MeasureValue& v) {
    py::dict d;
    d["quantity"] = quantity_name(v.quantity);
    d["value"] = v.value;
    d["error_estimate"] = v.error_estimate;
    d["verdict"] = finiteness_name(v.verdict);
    return d;
}

py::dict certificate_dict(const Certificate& c) {
    py::dict d;
    d["theorem"] = theorem_name(c.theorem);
    d["verdict"] = verdict_name(c.verdict);
    py::dict constants;
    for (const auto& [k, v] : c.constants) constants[py::str(k)] = v;
    d["constants"] = constants;
    auto checks = [](const std::vector<HypothesisCheck>& hs) {
        py::list out;
        for (const auto& h : hs) {
            py::dict e;
            e["name"] = h.name;
            e["passed"] = h.passed;
            e["diagnostic"] = h.diagnostic;
            out.append(e);
        }
        return out;
    };
    d["hypotheses"] = checks(c.hypotheses);
    d["diagnostics"] = checks(c.diagnostics);
    py::list rows;
    for (const auto& r : c.rows) {
        py::dict e;
        e["n"] = r.n;
        e["entropy_gap"] = r.entropy_gap;
        e["kl"] = r.kl;
        e["variation"] = r.variation;
        if (r.kolmogorov) e["kolmogorov"] = *r.kolmogorov;
        if (r.ratio_gap) e["ratio_gap"] = *r.ratio_gap;
        if (r.entropy_gap_bound) e["entropy_gap_bound"] = *r.entropy_gap_bound;
        if (r.kl_bound) e["kl_bound"] = *r.kl_bound;
        e["bounds_hold"] = r.bounds_hold;
        rows.append(e);
    }
    d["rows"] = rows;
    return d;
}

FamilySpec family_from_name(const std::string& scenario, const ScenarioParams& params) {
    return make_continuous_scenario(scenario, params).family;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "information measures and entropy-convergence certificates";

    py::register_exception<Error>(m, "EntroconvError");

    py::class_<SupportSpec>(m, "SupportSpec")
        .def_static("bounded_interval", &SupportSpec::bounded_interval, py::arg("a"),
                    py::arg("b"))
        .def_static(
            "half_line",
            [](double a, bool upward) {
                return SupportSpec::half_line(a, upward ? HalfLineDirection::Up
                                                        : HalfLineDirection::Down);
            },
            py::arg("a"), py::arg("upward") = true)
        .def_property_readonly("lower", &SupportSpec::lower)
        .def_property_readonly("upper", &SupportSpec::upper);

    py::class_<Density>(m, "Density")
        .def_static("piecewise_constant", &Density::piecewise_constant,
                    py::arg("breakpoints"), py::arg("values"),
                    py::arg("normalization_tol") = 1e-9)
        .def_static(
            "analytic",
            [](const SupportSpec& s, std::function<double(double)> fn, bool strictly_positive) {
                return Density::analytic(s, std::move(fn), strictly_positive);
            },
            py::arg("support"), py::arg("evaluate"), py::arg("strictly_positive") = false)
        .def("evaluate", py::overload_cast<double>(&Density::evaluate, py::const_),
             py::arg("x"))
        .def("evaluate2",
             py::overload_cast<double, double>(&Density::evaluate, py::const_),
             py::arg("x1"), py::arg("x2"))
        .def("cdf", &Density::cdf, py::arg("x"))
        .def("mass", &Density::mass, py::arg("a"), py::arg("b"))
        .def_property_readonly("strictly_positive", &Density::strictly_positive);

    m.def("build_counterexample", &build_counterexample, py::arg("n"));
    m.def("build_two_cell", &build_two_cell, py::arg("n"));
    m.def("build_nnfs_region", &build_nnfs_region, py::arg("level"));
    m.def("build_heavy_tail", &build_heavy_tail);

    m.def(
        "differential_entropy",
        [](const Density& d, double tol) {
            MeasureOptions opts;
            opts.tol = tol;
            return measure_dict(differential_entropy(d, opts));
        },
        py::arg("density"), py::arg("tol") = 1e-9);
    m.def(
        "kl_divergence",
        [](const Density& num, const Density& den, double tol) {
            MeasureOptions opts;
            opts.tol = tol;
            return measure_dict(kl_divergence(num, den, opts));
        },
        py::arg("num"), py::arg("den"), py::arg("tol") = 1e-9);
    m.def(
        "variation_distance",
        [](const Density& a, const Density& b, double tol) {
            MeasureOptions opts;
            opts.tol = tol;
            return measure_dict(variation_distance(a, b, opts));
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);
    m.def(
        "kolmogorov_distance",
        [](const Density& a, const Density& b, double tol) {
            MeasureOptions opts;
            opts.tol = tol;
            return measure_dict(kolmogorov_distance(a, b, opts));
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);
    m.def(
        "pinsker_check",
        [](const Density& a, const Density& b) {
            const PinskerCheck p = pinsker_check(a, b);
            py::dict d;
            d["variation"] = p.variation;
            d["kl"] = p.kl;
            d["bound"] = p.bound;
            d["holds"] = p.holds;
            return d;
        },
        py::arg("a"), py::arg("b"));

    py::class_<DiscretePmf>(m, "DiscretePmf")
        .def_static("finite", &DiscretePmf::finite, py::arg("probs"),
                    py::arg("normalization_tol") = 1e-12)
        .def_static("bernoulli", &DiscretePmf::bernoulli, py::arg("p"))
        .def_static("geometric", &DiscretePmf::geometric, py::arg("theta"))
        .def("prob", &DiscretePmf::prob, py::arg("i"))
        .def_property_readonly("has_finite_support", &DiscretePmf::has_finite_support);

    m.def(
        "discrete_entropy",
        [](const DiscretePmf& p, double eps) {
            DiscreteOptions opts;
            opts.eps = eps;
            return measure_dict(discrete_entropy(p, opts));
        },
        py::arg("pmf"), py::arg("eps") = 1e-10);
    m.def(
        "discrete_kl",
        [](const DiscretePmf& num, const DiscretePmf& den, double eps) {
            DiscreteOptions opts;
            opts.eps = eps;
            return measure_dict(discrete_kl(num, den, opts));
        },
        py::arg("num"), py::arg("den"), py::arg("eps") = 1e-10);
    m.def(
        "discrete_variation",
        [](const DiscretePmf& p, const DiscretePmf& q, double eps) {
            DiscreteOptions opts;
            opts.eps = eps;
            return measure_dict(discrete_variation(p, q, opts));
        },
        py::arg("p"), py::arg("q"), py::arg("eps") = 1e-10);

    m.def("continuous_scenarios", &continuous_scenario_names);
    m.def("discrete_scenarios", &discrete_scenario_names);

    m.def(
        "certify",
        [](const std::string& theorem, const std::string& scenario,
           const std::vector<int>& n_list, double convergence_threshold, double lambda,
           double parameter) {
            ScenarioParams params;
            params.lambda = lambda;
            params.parameter = parameter;
            if (theorem == "discrete") {
                const DiscreteScenario ds = make_discrete_scenario(scenario, params);
                DiscreteOptions opts;
                opts.convergence_threshold = convergence_threshold;
                return certificate_dict(
                    certify_discrete_pointwise(ds.member, ds.limit, n_list, opts, ds.hints));
            }
            CertifyOptions opts;
            opts.convergence_threshold = convergence_threshold;
            const FamilySpec fam = family_from_name(scenario, params);
            Certificate cert;
            if (theorem == "thm1")
                cert = certify_thm1(fam, n_list, opts);
            else if (theorem == "thm2")
                cert = certify_thm2(fam, n_list, opts);
            else if (theorem == "thm3")
                cert = certify_thm3(fam, n_list, opts);
            else if (theorem == "corollary")
                cert = certify_corollary(fam, n_list, opts);
            else
                throw ArgumentError("unknown theorem '" + theorem + "'");
            return certificate_dict(cert);
        },
        py::arg("theorem"), py::arg("scenario"), py::arg("n_list"),
        py::arg("convergence_threshold") = 1e-3, py::arg("lambda") = 1.0,
        py::arg("parameter") = 0.5);

    m.def(
        "kl_decomposition_check",
        [](const std::string& scenario, int n) {
            const DecompositionCheck c =
                kl_decomposition_check(family_from_name(scenario, {}), n);
            py::dict d;
            d["kl_direct"] = c.kl_direct;
            d["kl_via_decomposition"] = c.kl_via_decomposition;
            d["residual"] = c.residual;
            d["combined_error"] = c.combined_error;
            return d;
        },
        py::arg("scenario"), py::arg("n"));
}
