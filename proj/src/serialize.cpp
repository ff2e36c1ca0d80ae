#include "dioph/serialize.hpp"

namespace dioph {

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const SContext& s) {
    Json out = Json::array();
    for (const auto& p : s.primes()) {
        if (p.fits_slong_p())
            out.push_back(p.get_si());
        else
            out.push_back(p.get_str());
    }
    return out;
}

Json to_json(const ProjPoint& p) {
    Json out = Json::array();
    for (const auto& c : p.coords()) out.push_back(c.get_str());
    return out;
}

Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

Json to_json(const ClassRep& c) {
    return Json{{"tuple", to_json(c.entries())}, {"primes", to_json(c.tuple().context())}};
}

Json to_json(const BinaryFormSpec& f) {
    Json out;
    if (f.kind() == FormKind::XYXminusY) {
        out["form"] = "xy(x-y)";
    } else {
        out["roots"] = to_json(std::vector<Rational>(f.roots().begin(), f.roots().end()));
        out["cofactor"] = to_json(f.cofactor());
    }
    out["k"] = to_json(f.k());
    out["degree"] = f.degree();
    return out;
}

Json to_json(const TMSolution& s) {
    return Json{{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"eps", to_json(s.eps)}, {"point", to_json(s.point)}};
}

Json to_json(const ShearResult& r) {
    Json sols = Json::array();
    for (const auto& s : r.solutions) sols.push_back(to_json(s));
    Json rows = Json::array();
    for (const auto& row : r.matrix.row_vectors()) rows.push_back(to_json(row));
    return Json{{"target", to_json(r.target)}, {"matrix", rows}, {"solutions", sols}, {"delta", to_json(r.delta)}};
}

Json to_json(const Interval& x) { return Json::array({x.lo().to_string(25), x.hi().to_string(25)}); }

Json to_json(const ApproxReport& r) {
    Json out{{"root", r.root},
             {"real_root", r.real_root},
             {"alpha", r.real_root ? to_json(r.alpha.re) : Json{{"re", to_json(r.alpha.re)}, {"im", to_json(r.alpha.im)}}},
             {"distance", to_json(r.distance)},
             {"bound", to_json(r.bound)},
             {"kappa", to_json(r.kappa)},
             {"holds", to_string(r.holds)},
             {"y_floor", r.y_floor ? to_json(*r.y_floor) : Json(nullptr)},
             {"above_floor", to_string(r.above_floor)},
             {"tie", r.tie},
             {"precision", r.precision}};
    if (!r.banner.empty()) out["banner"] = r.banner;
    return out;
}

Json to_json(const ForwardReport& r) {
    return Json{{"value", r.value.get_str()},        {"root", r.root},
                {"bound", to_json(r.bound)},         {"within", to_string(r.within)},
                {"approximant", to_string(r.approximant)}, {"precision", r.precision}};
}

namespace {

Json points(const std::vector<ProjPoint>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

}  // namespace

Json to_json(const Covering& c) {
    return Json{{"points", c.points.size()},
                {"nondegenerate", points(c.nondegenerate)},
                {"degenerate", c.degenerate.size()},
                {"subsum_hyperplanes", points(c.subsum_hyperplanes)},
                {"point_hyperplanes", points(c.point_hyperplanes)}};
}

Json to_json(const Reordering& r) {
    return Json{{"r", r.r}, {"permutation", r.permutation}, {"coefficients", to_json(r.coefficients)}};
}

Json to_json(const ArrangementCover& c) {
    Json classes = Json::array();
    for (const auto& cl : c.classes) classes.push_back(to_json(cl.entries()));
    return Json{{"reordering", to_json(c.reordering)},
                {"primes", to_json(c.extended)},
                {"classes", classes},
                {"hyperplanes", points(c.hyperplanes)}};
}

Json to_json(const CurvePoint& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected a rational as a string or integer");
}

SContext context_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of primes");
    std::vector<Integer> primes;
    for (const auto& p : j) primes.push_back(p.is_string() ? Integer(p.get<std::string>()) : Integer(p.get<long>()));
    return SContext(std::move(primes));
}

ProjPoint point_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of coordinates");
    IVector v;
    for (const auto& c : j) v.push_back(c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long>()));
    return ProjPoint(v);
}

}  // namespace dioph
