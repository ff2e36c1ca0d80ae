#include "dioph/approx.hpp"
#include "dioph/curves.hpp"
#include "dioph/hyperarr.hpp"
#include "dioph/projective.hpp"
#include "dioph/sarith.hpp"
#include "dioph/serialize.hpp"
#include "dioph/specparse.hpp"
#include "dioph/suite.hpp"
#include "dioph/thuemahler.hpp"
#include "dioph/unitsolve.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;

// Integer <-> int and Rational <-> fractions.Fraction, through decimal strings so size is unbounded.
namespace pybind11::detail {

template <>
struct type_caster<dioph::Integer> {
    PYBIND11_TYPE_CASTER(dioph::Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = dioph::Integer(py::str(src).cast<std::string>());
        return true;
    }
    static handle cast(const dioph::Integer& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<dioph::Rational> {
    PYBIND11_TYPE_CASTER(dioph::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (PyBool_Check(src.ptr())) return false;
        if (PyLong_Check(src.ptr())) {
            value = dioph::Rational(dioph::Integer(py::str(src).cast<std::string>()));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator") || PyFloat_Check(src.ptr()))
            return false;
        const auto num = py::str(src.attr("numerator")).cast<std::string>();
        const auto den = py::str(src.attr("denominator")).cast<std::string>();
        value = dioph::Rational(dioph::Integer(num), dioph::Integer(den));
        return true;
    }
    static handle cast(const dioph::Rational& v, return_value_policy, handle) {
        // leaked on purpose: destroying it after interpreter shutdown would touch a dead runtime
        static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
        return (*fraction)(py::int_(py::reinterpret_steal<py::object>(
                            PyLong_FromString(v.num().get_str().c_str(), nullptr, 10))),
                        py::int_(py::reinterpret_steal<py::object>(
                            PyLong_FromString(v.den().get_str().c_str(), nullptr, 10))))
            .release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace dioph;

SContext ctx(const std::vector<Integer>& primes) { return SContext(primes); }

py::object from_json(const Json& j) {
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(j.dump());
}

ProjPoint point(const std::vector<Rational>& raw) { return normalize(raw); }

std::vector<Hyperplane> hyperplanes(const std::vector<std::vector<Rational>>& rows) {
    std::vector<Hyperplane> out;
    for (const auto& r : rows) out.push_back(normalize(r));
    return out;
}

QMatrix matrix(const std::vector<std::vector<Rational>>& rows) { return QMatrix(rows); }

BinaryFormSpec form(const std::string& text) {
    auto parsed = parse_equation_spec(text);
    if (!std::holds_alternative<BinaryFormSpec>(parsed)) throw std::invalid_argument("not a binary form spec");
    return std::get<BinaryFormSpec>(parsed);
}

py::dict solution(const TMSolution& s) {
    py::dict d;
    d["x"] = s.x;
    d["y"] = s.y;
    d["eps"] = s.eps;
    d["point"] = s.point.coords();
    return d;
}

std::size_t cap_or_default(std::optional<std::size_t> cap) { return cap.value_or(kDefaultEnumerationCap); }

}  // namespace

PYBIND11_MODULE(_dioph, m) {
    m.doc() = "S-unit equations, Thue-Mahler equations and integral points on hyperplane complements over Q";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("valuation", [](const Rational& x, const Integer& p) { return valuation(x, p); }, py::arg("x"), py::arg("p"));
    m.def(
        "s_membership", [](const Rational& x, const std::vector<Integer>& primes) {
            return std::string(to_string(s_membership(x, ctx(primes))));
        },
        py::arg("x"), py::arg("primes"));
    m.def(
        "enumerate_s_units",
        [](const std::vector<Integer>& primes, unsigned bound, std::optional<std::size_t> cap) {
            return enumerate_s_units(ctx(primes), bound, cap_or_default(cap));
        },
        py::arg("primes"), py::arg("bound"), py::arg("cap") = py::none());
    m.def(
        "extend_s", [](const std::vector<Integer>& primes, const std::vector<Rational>& values) {
            return extend_s(ctx(primes), values).primes();
        },
        py::arg("primes"), py::arg("values"));

    m.def(
        "solve_unit_equation",
        [](std::size_t n, const std::vector<Integer>& primes, unsigned bound, std::optional<std::size_t> cap) {
            std::vector<std::vector<Rational>> out;
            for (const auto& c : solve_unit_equation(n, ctx(primes), bound, cap_or_default(cap))) out.push_back(c.entries());
            return out;
        },
        py::arg("n"), py::arg("primes"), py::arg("bound"), py::arg("cap") = py::none());
    m.def("vanishing_subsums", &vanishing_subsums, py::arg("t"), py::arg("min_size") = 2);
    m.def(
        "lift_gamma",
        [](const std::vector<Rational>& base, const Rational& gamma, std::size_t t, const std::vector<Integer>& primes) {
            const SContext s = ctx(primes);
            const auto lift = lift_gamma(ClassRep(UnitTuple(base, s)), gamma, t, s);
            return py::make_tuple(lift.tuple.entries(), lift.extended.primes());
        },
        py::arg("base"), py::arg("gamma"), py::arg("t"), py::arg("primes"));
    m.def(
        "lift_binomial", [](const Rational& eps, unsigned m, const std::vector<Integer>& primes) {
            const auto lift = lift_binomial(eps, m, ctx(primes));
            return py::make_tuple(lift.tuple.entries(), lift.degenerate);
        },
        py::arg("eps"), py::arg("m"), py::arg("primes"));

    m.def("normalize", [](const std::vector<Rational>& raw) { return point(raw).coords(); }, py::arg("raw"));
    m.def(
        "is_s_integral",
        [](const std::vector<Rational>& p, const std::vector<std::vector<Rational>>& arrangement,
           const std::vector<Integer>& primes) { return is_s_integral(point(p), hyperplanes(arrangement), ctx(primes)); },
        py::arg("point"), py::arg("arrangement"), py::arg("primes"));
    m.def(
        "change_coordinates",
        [](const std::vector<Rational>& p, const std::vector<std::vector<Rational>>& rows) {
            const auto c = change_coordinates(point(p), matrix(rows));
            return py::make_tuple(c.point.coords(), c.delta.primes());
        },
        py::arg("point"), py::arg("matrix"));

    m.def("eval_form", [](const std::string& spec, const Rational& x, const Rational& y) { return eval_form(form(spec), x, y); },
          py::arg("spec"), py::arg("x"), py::arg("y"));
    m.def(
        "solve_thue_mahler",
        [](const std::string& spec, const std::vector<Integer>& primes, unsigned long height,
           std::optional<std::size_t> cap) {
            py::list out;
            for (const auto& s : solve_thue_mahler(form(spec), ctx(primes), height, cap_or_default(cap)))
                out.append(solution(s));
            return out;
        },
        py::arg("spec"), py::arg("primes"), py::arg("height"), py::arg("cap") = py::none());
    m.def(
        "siegel_residue",
        [](const std::array<Rational, 3>& roots, const Rational& x, const Rational& y) { return siegel_residue(roots, x, y); },
        py::arg("roots"), py::arg("x"), py::arg("y"));
    m.def(
        "transport_thue_to_unit",
        [](const std::string& spec, const Rational& x, const Rational& y, const Rational& eps,
           const std::vector<Integer>& primes) {
            const auto u = transport_thue_to_unit(form(spec), TMSolution{x, y, eps, point({x, y})}, ctx(primes));
            return py::make_tuple(u.beta, u.gamma);
        },
        py::arg("spec"), py::arg("x"), py::arg("y"), py::arg("eps"), py::arg("primes"));
    m.def(
        "transport_unit_to_thue", [](const std::string& spec, const Rational& gamma, const Rational& eta) {
            return solution(transport_unit_to_thue(form(spec), gamma, eta));
        },
        py::arg("spec"), py::arg("gamma"), py::arg("eta"));

    m.def(
        "kappa_backward",
        [](const std::vector<Integer>& coeffs, const Integer& k, long precision) {
            py::list out;
            for (const auto& b : kappa_backward(coeffs, k, precision))
                out.append(py::make_tuple(b.kappa.lo().to_rational(), b.kappa.hi().to_rational()));
            return out;
        },
        py::arg("coeffs"), py::arg("k"), py::arg("precision") = 64);
    m.def(
        "verify_inequality",
        [](const std::vector<Integer>& coeffs, const Integer& k, const Integer& x, const Integer& y, long precision) {
            return from_json(to_json(verify_inequality(coeffs, k, x, y, precision)));
        },
        py::arg("coeffs"), py::arg("k"), py::arg("x"), py::arg("y"), py::arg("precision") = 64);

    m.def(
        "distinct_traces",
        [](const std::vector<std::vector<Rational>>& basis, std::optional<std::vector<Rational>> witness) {
            std::optional<ProjPoint> w;
            if (witness) w = point(*witness);
            const auto r = distinct_traces(SubspaceModel(matrix(basis)), w);
            py::dict d;
            d["count"] = r.count;
            d["hypothesis"] = r.hypothesis;
            d["required"] = r.required;
            return d;
        },
        py::arg("basis"), py::arg("witness") = py::none());
    m.def(
        "covering_hyperplanes",
        [](std::size_t n, const std::vector<Integer>& primes, unsigned bound, std::optional<std::size_t> cap) {
            return from_json(to_json(covering_hyperplanes(n, ctx(primes), bound, cap_or_default(cap))));
        },
        py::arg("n"), py::arg("primes"), py::arg("bound"), py::arg("cap") = py::none());

    m.def(
        "enumerate_points",
        [](const std::string& spec, long box, std::optional<std::size_t> cap) {
            auto parsed = parse_equation_spec(spec);
            if (!std::holds_alternative<CurveSpec>(parsed)) throw std::invalid_argument("not a curve spec");
            return enumerate_points(std::get<CurveSpec>(parsed), box, cap_or_default(cap));
        },
        py::arg("spec"), py::arg("box"), py::arg("cap") = py::none());
    m.def(
        "canonical_spec", [](const std::string& text) { return format_equation_spec(parse_equation_spec(text)); },
        py::arg("text"));
    m.def(
        "run_verification_suite",
        [](const std::string& name, double budget, std::uint64_t seed) {
            const auto r = run_verification_suite(name, budget, seed);
            py::list checks;
            for (const auto& c : r.checks) {
                py::dict d;
                d["name"] = c.name;
                d["topic"] = c.topic;
                d["passed"] = c.passed;
                d["detail"] = c.detail;
                checks.append(d);
            }
            py::dict d;
            d["suite"] = r.suite;
            d["complete"] = r.complete;
            d["passed"] = r.passed();
            d["checks"] = checks;
            return d;
        },
        py::arg("name"), py::arg("budget") = 120.0, py::arg("seed") = kDefaultSeed);
}
