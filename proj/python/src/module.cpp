#include <feuler/basis.hpp>
#include <feuler/core.hpp>
#include <feuler/identity_lab.hpp>
#include <feuler/io.hpp>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace feuler;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints and strings are
// accepted on the way in.
BigRat to_bigrat(const py::handle &obj)
{
    return parse_bigrat(py::str(obj).cast<std::string>());
}

py::object to_fraction(const BigRat &q)
{
    return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

py::object to_python(const json &j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

json from_python(const py::handle &obj)
{
    return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

LRat as_lrat(const py::handle &obj)
{
    if (py::isinstance<LRat>(obj)) {
        return obj.cast<LRat>();
    }
    if (py::isinstance<py::str>(obj)) {
        return parse_lrat(obj.cast<std::string>());
    }
    return LRat(to_bigrat(obj));
}

} // namespace

PYBIND11_MODULE(_feuler, m)
{
    m.doc() = "Exact Frobenius-Euler numbers and polynomials over Q(lambda)";

    // PoleError is a domain_error; later registrations are tried first.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const std::domain_error &e) {
            PyErr_SetString(PyExc_ZeroDivisionError, e.what());
        }
    });
    py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

    py::class_<LRat>(m, "LRat")
        .def(py::init<>())
        .def(py::init([](const py::object &v) { return as_lrat(v); }), py::arg("value"))
        .def_static("lam", &LRat::lambda)
        .def("is_zero", &LRat::is_zero)
        .def("eval_at", [](const LRat &f, const py::object &at) { return to_fraction(f.eval_at(to_bigrat(at))); })
        .def("invert_lambda", &LRat::invert_lambda)
        .def("inverse", &LRat::inverse)
        .def("__pow__", [](const LRat &f, int k) { return f.pow(k); })
        .def("to_latex", [](const LRat &f) { return to_latex(f); })
        .def("to_json", [](const LRat &f) { return to_python(to_json(f)); })
        .def_static("from_json", [](const py::object &o) { return lrat_from_json(from_python(o)); })
        .def("__str__", [](const LRat &f) { return to_text(f); })
        .def("__repr__", [](const LRat &f) { return "LRat('" + to_text(f) + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__eq__", [](const LRat &a, const py::object &b) { return a == as_lrat(b); })
        .def("__hash__", [](const LRat &f) { return py::hash(py::str(to_text(f))); });

    py::class_<XPoly>(m, "XPoly")
        .def(py::init<>())
        .def(py::init([](const py::list &coeffs) {
                 std::vector<LRat> c;
                 for (const auto &item : coeffs) {
                     c.push_back(as_lrat(item));
                 }
                 return XPoly(std::move(c));
             }),
             py::arg("coeffs"))
        .def_static("parse", [](const std::string &text) { return parse_xpoly(text); })
        .def_static("monomial", &XPoly::monomial, py::arg("k"), py::arg("c") = LRat(1))
        .def_property_readonly("coeffs", &XPoly::coeffs)
        .def_property_readonly("degree", &XPoly::degree)
        .def("is_zero", &XPoly::is_zero)
        .def("__call__", [](const XPoly &p, const py::object &at) { return p(as_lrat(at)); })
        .def("to_latex", [](const XPoly &p) { return to_latex(p); })
        .def("to_json", [](const XPoly &p) { return to_python(to_json(p)); })
        .def_static("from_json", [](const py::object &o) { return xpoly_from_json(from_python(o)); })
        .def("__str__", [](const XPoly &p) { return to_text(p); })
        .def("__repr__", [](const XPoly &p) { return "XPoly('" + to_text(p) + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * LRat())
        .def(-py::self)
        .def(py::self == py::self);

    py::class_<FEExpansion>(m, "FEExpansion")
        .def(py::init([](unsigned order, std::vector<LRat> coeffs) { return FEExpansion{order, std::move(coeffs)}; }),
             py::arg("order"), py::arg("coeffs"))
        .def_readonly("order", &FEExpansion::order)
        .def_readonly("coeffs", &FEExpansion::coeffs)
        .def("to_json", [](const FEExpansion &e) { return to_python(to_json(e)); })
        .def_static("from_json", [](const py::object &o) { return expansion_from_json(from_python(o)); })
        .def("__repr__",
             [](const FEExpansion &e) { return "FEExpansion(" + to_python(to_json(e)).attr("__repr__")().cast<std::string>() + ")"; })
        .def(py::self == py::self);

    m.def("fe_number", &fe_number, py::arg("n"));
    m.def("fe_numbers_via_series", &fe_numbers_via_series, py::arg("n_max"));
    m.def("fe_number_higher", &fe_number_higher, py::arg("n"), py::arg("r"));
    m.def("fe_poly", &fe_poly, py::arg("n"));
    m.def("fe_poly_higher", &fe_poly_higher, py::arg("n"), py::arg("r"));
    m.def("delta_lambda", &delta_lambda, py::arg("p"));
    m.def("poly_derivative", &poly_derivative, py::arg("p"), py::arg("k") = 1);
    m.def("integral_01", &integral_01, py::arg("p"));

    m.def("to_fe_basis", &to_fe_basis, py::arg("p"));
    m.def("to_fe_basis_higher", &to_fe_basis_higher, py::arg("p"), py::arg("r"));
    m.def("from_fe_basis", &from_fe_basis, py::arg("e"));
    m.def("fe_change_order", &fe_change_order, py::arg("n"), py::arg("r"));

    m.def("registry_list", [] {
        std::vector<std::string> ids;
        for (const auto &identity : registry_list()) {
            ids.push_back(identity.id);
        }
        return ids;
    });
    m.def(
        "verify_identity",
        [](const std::string &id, unsigned n, std::optional<unsigned> r) {
            return to_python(to_json(verify_identity(id, n, r)));
        },
        py::arg("id"), py::arg("n"), py::arg("r") = py::none());
    m.def(
        "random_screen",
        [](const std::string &id, unsigned n, std::optional<unsigned> r, unsigned trials, std::uint64_t seed) {
            return to_python(to_json(random_screen(id, n, r, trials, seed)));
        },
        py::arg("id"), py::arg("n"), py::arg("r") = py::none(), py::arg("trials") = 4, py::arg("seed") = 0);
    m.def(
        "report",
        [](unsigned max_n, unsigned max_r, std::optional<std::uint64_t> seed, unsigned trials) {
            json ids = json::array();
            for (const auto &identity : registry_list()) {
                ids.push_back(to_json(summarize(identity, max_n, max_r, seed, trials)));
            }
            json doc = json::object();
            doc["header"] = report_header(max_n, max_r, seed, trials);
            doc["identities"] = std::move(ids);
            return to_python(doc);
        },
        py::arg("max_n") = 8, py::arg("max_r") = 4, py::arg("seed") = py::none(), py::arg("trials") = 4);
}
