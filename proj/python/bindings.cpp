#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuspfol/cli.hpp"
#include "cuspfol/germs.hpp"
#include "cuspfol/normal_form.hpp"
#include "cuspfol/parser.hpp"
#include "cuspfol/transversal.hpp"

namespace py = pybind11;
using namespace cuspfol;

namespace {

std::string coeff_str(const Coeff &c) {
    std::ostringstream s;
    s << c;
    return s.str();
}

ReductionReport reduce_text(const std::string &form, int order) { return reduce_cusp(parse_form(form, order).form); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cusp-type dicritical foliations: exact jets, reduction, normal forms, moduli";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "run",
        [](const std::vector<std::string> &args) {
            cli::Result r = cli::run(args);
            return py::make_tuple(r.exit_code, r.json, r.text);
        },
        py::arg("args"), "Run a CLI command; returns (exit_code, json, text).");

    m.def(
        "parse_form", [](const std::string &text, int order) { return parse_form(text, order).print(); }, py::arg("text"),
        py::arg("order") = kDefaultOrder, "Parse a 1-form and print it back.");

    m.def(
        "reduce",
        [](const std::string &form, int order) {
            ReductionReport r = reduce_text(form, order);
            return to_string(r.verdict);
        },
        py::arg("form"), py::arg("order") = kDefaultOrder, "Verdict of the two-blow-up reduction.");

    m.def(
        "sigma",
        [](const std::string &form, int order) {
            ReductionReport r = reduce_text(form, order);
            if (r.verdict != Verdict::CuspTypeAbsolutelyDicritical)
                throw std::invalid_argument("not cusp type: " + to_string(r.verdict));
            return transversal_structure(corner_germ(r), order).jet().str();
        },
        py::arg("form"), py::arg("order") = kDefaultOrder, "Transversal structure germ of a cusp-type form.");

    m.def(
        "schwarzian", [](const std::string &series, int order) { return schwarzian(GermDiff1(parse_series1(series, "z", order))).str(); },
        py::arg("series"), py::arg("order") = kDefaultOrder, "Schwarzian derivative of a germ given as a series in z.");

    m.def(
        "normalize",
        [](const std::string &form, int order) {
            NormalFormData d = normalize(parse_form(form, order).form, order);
            py::dict out;
            out["alpha"] = coeff_str(d.alpha);
            out["a"] = coeff_str(d.a);
            out["e5"] = coeff_str(d.e5);
            out["normal_form"] = reconstruct(d).str();
            return out;
        },
        py::arg("form"), py::arg("order") = kDefaultOrder, "Formal normal form coefficients.");
}
