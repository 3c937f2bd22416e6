#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetakit/invariants.hpp"
#include "thetakit/products.hpp"
#include "thetakit/suite.hpp"

namespace py = pybind11;
using namespace thetakit;

namespace {

py::dict value_dict(const RealValue& v, int digits)
{
    py::dict d;
    d["value"] = v.value().to_string(digits);
    d["error_bound"] = v.error().to_string(3);
    d["float"] = v.to_double();
    return d;
}

SuiteOptions options(int digits, long series_order, const std::vector<std::string>& probes, const std::string& mode,
                     const std::string& catalogue, const std::string& registry)
{
    SuiteOptions o;
    o.digits = digits;
    o.series_order = series_order;
    if (!probes.empty()) o.probes = probes;
    if (mode == "series") o.mode = IdentityMode::series;
    else if (mode == "numeric") o.mode = IdentityMode::numeric;
    else if (mode == "both") o.mode = IdentityMode::both;
    else throw std::invalid_argument("mode must be 'series', 'numeric' or 'both'");
    if (!catalogue.empty()) o.catalogue = load_catalogue(catalogue);
    if (!registry.empty()) o.registry = Registry::load(registry);
    return o;
}

template <class Fn>
std::string run_json(Fn&& fn)
{
    RunReport r;
    {
        py::gil_scoped_release release;
        r = fn();
    }
    return to_json_lines(r);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "High-precision theta-function products, class invariants and identity checks";
    m.attr("__version__") = std::string(toolkit_version());

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "eval_a",
        [](const std::string& mm, const std::string& n, int digits) {
            const ProductValue v = a_numeric(parse_rational(mm), parse_rational(n), PrecisionSpec::for_digits(digits));
            py::dict d = value_dict(v.value, digits);
            d["forms"] = v.forms_checked;
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("digits") = 100);
    m.def(
        "eval_b",
        [](const std::string& mm, const std::string& n, int digits) {
            const ProductValue v = b_numeric(parse_rational(mm), parse_rational(n), PrecisionSpec::for_digits(digits));
            py::dict d = value_dict(v.value, digits);
            d["forms"] = v.forms_checked;
            return d;
        },
        py::arg("m"), py::arg("n"), py::arg("digits") = 100);
    m.def(
        "eval_invariant",
        [](const std::string& kind, const std::string& n, int digits) {
            if (kind != "g" && kind != "G") throw std::invalid_argument("kind must be 'g' or 'G'");
            return value_dict(invariant_numeric(kind == "g" ? InvariantKind::g : InvariantKind::G, parse_rational(n),
                                                PrecisionSpec::for_digits(digits)),
                              digits);
        },
        py::arg("kind"), py::arg("n"), py::arg("digits") = 100);
    m.def(
        "eval_nome",
        [](const std::string& mm, const std::string& n, int digits) {
            const PrecisionSpec prec = PrecisionSpec::for_digits(digits);
            WorkingPrecision wp(prec.working_digits());
            return value_dict(nome(parse_rational(mm), parse_rational(n), prec).q, digits);
        },
        py::arg("m"), py::arg("n"), py::arg("digits") = 100);
    m.def(
        "eval_radical",
        [](const std::string& text, int digits) {
            return value_dict(eval_radical(parse_radical(text), PrecisionSpec::for_digits(digits)), digits);
        },
        py::arg("text"), py::arg("digits") = 100);

    m.def("identity_ids", [] {
        std::vector<std::string> ids;
        for (const auto& r : builtin_catalogue()) ids.push_back(r.id);
        return ids;
    });
    m.def("registry_ids", [] {
        std::vector<std::string> ids;
        for (const auto& r : Registry::builtin().corollaries()) ids.push_back(r.id);
        return ids;
    });


    m.def(
        "_verify_identity",
        [](const std::string& id, const std::string& mode, int digits, long order, const std::vector<std::string>& probes,
           const std::string& catalogue) {
            const SuiteOptions o = options(digits, order, probes, mode, catalogue, "");
            return run_json([&] { return verify_identities(o, id); });
        },
        py::arg("id"), py::arg("mode"), py::arg("digits"), py::arg("series_order"), py::arg("probes"),
        py::arg("catalogue"));
    m.def(
        "_verify_corollary",
        [](const std::string& id, int digits, const std::string& registry) {
            const SuiteOptions o = options(digits, 720, {}, "both", "", registry);
            return run_json([&] { return verify_corollaries(o, id); });
        },
        py::arg("id"), py::arg("digits"), py::arg("registry"));
    m.def(
        "_reproduce",
        [](const std::string& id, int digits, const std::string& registry) {
            const SuiteOptions o = options(digits, 720, {}, "both", "", registry);
            return run_json([&] { return reproduce(o, id); });
        },
        py::arg("id"), py::arg("digits"), py::arg("registry"));
    m.def(
        "_run_suite",
        [](int digits, long order, const std::vector<std::string>& probes, const std::string& catalogue,
           const std::string& registry) {
            const SuiteOptions o = options(digits, order, probes, "both", catalogue, registry);
            return run_json([&] { return run_suite(o); });
        },
        py::arg("digits"), py::arg("series_order"), py::arg("probes"), py::arg("catalogue"), py::arg("registry"));
}
