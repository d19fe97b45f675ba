#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arcinv/catalog.hpp"
#include "arcinv/fibers.hpp"
#include "arcinv/io.hpp"
#include "arcinv/recovery.hpp"
#include "arcinv/zeta.hpp"

namespace py = pybind11;
using namespace arcinv;

namespace {

Sign sign_of(int s) {
    if (s == 1) return Sign::plus;
    if (s == -1) return Sign::minus;
    throw py::value_error("sign must be +1 or -1");
}

std::vector<Term> terms_of(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Term> out;
    for (auto [e, s] : pairs) out.push_back({e, sign_of(s)});
    return out;
}

py::dict coefficient_dict(int n, const RealizedCoefficient& c) {
    py::dict d;
    d["n"] = n;
    d["bbar"] = c.bbar;
    d["fplus"] = c.fplus;
    d["fminus"] = c.fminus;
    return d;
}

template <ZetaKind Kind>
py::list zeta_list(const RealizedZeta<Kind>& z) {
    py::list out;
    for (int n = 1; n <= z.order(); ++n) out.append(coefficient_dict(n, z.at(n)));
    return out;
}

int resolve_order(const BrieskornPoly& f, std::optional<int> order) { return order ? *order : default_order(f); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Arc-analytic invariants of Brieskorn polynomials";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<RecoveryError>(m, "RecoveryError", PyExc_RuntimeError);
    py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflow", PyExc_OverflowError);

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<>())
        .def(py::init<Coefficient>())
        .def_static("power", &LaurentPoly::power, py::arg("exponent"))
        .def_static("from_pairs",
                    [](const std::vector<std::pair<int, Coefficient>>& p) { return LaurentPoly::from_terms(p); })
        .def("pairs", &LaurentPoly::to_pairs, "[(exponent, coefficient)] by decreasing exponent")
        .def("is_zero", &LaurentPoly::is_zero)
        .def("degree", [](const LaurentPoly& p) -> std::optional<int> {
            if (auto l = p.leading()) return l->degree;
            return std::nullopt;
        })
        .def("evaluate",
             [](const LaurentPoly& p, Coefficient x) {
                 const Rational r = evaluate(p, x);
                 return py::module_::import("fractions").attr("Fraction")(r.num, r.den);
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__hash__", [](const LaurentPoly& p) { return py::hash(py::str(p.to_string())); })
        .def("__str__", &LaurentPoly::to_string)
        .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; });

    py::class_<BrieskornPoly>(m, "BrieskornPoly")
        .def(py::init([](const std::vector<std::pair<int, int>>& t) { return BrieskornPoly(terms_of(t)); }),
             py::arg("terms"), "terms: [(exponent, sign)]")
        .def("terms",
             [](const BrieskornPoly& f) {
                 std::vector<std::pair<int, int>> out;
                 for (const auto& t : f.terms()) out.emplace_back(t.exponent, to_int(t.sign));
                 return out;
             })
        .def("exponents", &BrieskornPoly::exponents)
        .def_property_readonly("num_variables", &BrieskornPoly::num_variables)
        .def(py::self == py::self)
        .def("__str__", &BrieskornPoly::to_string)
        .def("__repr__", [](const BrieskornPoly& f) { return "BrieskornPoly('" + f.to_string() + "')"; });

    m.def("parse", &parse, py::arg("text"));
    m.def("normalize", &normalize, py::arg("f"));
    m.def("is_singular", &is_singular, py::arg("f"));
    m.def("relevant_exponents", py::overload_cast<const BrieskornPoly&>(&relevant_exponents), py::arg("f"));
    m.def(
        "sign_counts",
        [](const BrieskornPoly& f, int k) {
            const auto c = sign_counts(f, k);
            return std::make_pair(c.plus, c.minus);
        },
        py::arg("f"), py::arg("k"));
    m.def(
        "classify",
        [](const BrieskornPoly& f, const BrieskornPoly& g) {
            const auto v = classify_pair(f, g);
            py::dict d;
            d["equivalent"] = v.equivalent;
            d["reason"] = std::string(to_string(v.reason));
            d["detail"] = v.detail;
            d["text"] = v.describe();
            return d;
        },
        py::arg("f"), py::arg("g"));

    m.def(
        "beta_closed", [](const BrieskornPoly& f, int c) { return beta_closed(FiberQuery(f.terms(), c)); },
        py::arg("f"), py::arg("target"));
    m.def(
        "beta_recursive", [](const BrieskornPoly& f, int c) { return beta_recursive(FiberQuery(f.terms(), c)); },
        py::arg("f"), py::arg("target"));
    m.def(
        "euler_fiber", [](const BrieskornPoly& f, int c) { return euler_fiber(FiberQuery(f.terms(), c)); },
        py::arg("f"), py::arg("target"));

    m.def(
        "modified_zeta",
        [](const BrieskornPoly& f, std::optional<int> order) { return zeta_list(modified_zeta(f, resolve_order(f, order))); },
        py::arg("f"), py::arg("order") = py::none());
    m.def(
        "plain_zeta",
        [](const BrieskornPoly& f, std::optional<int> order) {
            return zeta_list(plain_from_modified(modified_zeta(f, resolve_order(f, order))));
        },
        py::arg("f"), py::arg("order") = py::none());
    m.def(
        "zeta_json",
        [](const BrieskornPoly& f, std::optional<int> order) {
            return to_json(modified_zeta(f, resolve_order(f, order))).dump();
        },
        py::arg("f"), py::arg("order") = py::none());
    m.def(
        "zeta_equal",
        [](const BrieskornPoly& f, const BrieskornPoly& g, int order) {
            return zeta_equal(modified_zeta(f, order), modified_zeta(g, order));
        },
        py::arg("f"), py::arg("g"), py::arg("order"));

    m.def(
        "recover",
        [](const BrieskornPoly& f, std::optional<int> order) {
            const auto n = normalize(f);
            const auto rec = recover(n.exponents(), modified_zeta(f, resolve_order(f, order)));
            py::list out;
            for (const auto& s : rec.steps) {
                py::dict d;
                d["k"] = s.k;
                d["sigma_plus"] = s.counts.plus;
                d["sigma_minus"] = s.counts.minus;
                d["pi"] = s.pi;
                d["rho"] = s.rho;
                d["branch"] = std::string(to_string(s.branch));
                out.append(d);
            }
            return out;
        },
        py::arg("f"), py::arg("order") = py::none());
    m.def("roundtrip_check", &roundtrip_check, py::arg("f"), py::arg("order"));

    m.def("enumerate_normalized", &enumerate_normalized, py::arg("variables"), py::arg("min_exp"), py::arg("max_exp"));
    m.def("predicted_class_count", &predicted_class_count, py::arg("variables"), py::arg("max_exp"));
}
