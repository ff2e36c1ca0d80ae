#include "dioph/curves.hpp"

#include "dioph/poly.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace dioph {

std::string to_string(Family f) {
    switch (f) {
        case Family::Mordell: return "mordell";
        case Family::Elliptic: return "elliptic";
        case Family::Hyperelliptic: return "hyperelliptic";
        case Family::Superelliptic: return "superelliptic";
        case Family::ThueClassic: return "thue";
        case Family::SiegelUnits: return "siegel";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::Mordell, Family::Elliptic, Family::Hyperelliptic, Family::Superelliptic,
                     Family::ThueClassic, Family::SiegelUnits})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown curve family: " + name);
}

CurveSpec CurveSpec::mordell(Integer k) {
    CurveSpec c;
    c.family = Family::Mordell;
    c.k = std::move(k);
    return c;
}

CurveSpec CurveSpec::elliptic(std::vector<Integer> f) {
    CurveSpec c;
    c.family = Family::Elliptic;
    c.f = std::move(f);
    return c;
}

CurveSpec CurveSpec::hyperelliptic(std::vector<Integer> f) {
    CurveSpec c;
    c.family = Family::Hyperelliptic;
    c.f = std::move(f);
    return c;
}

CurveSpec CurveSpec::superelliptic(std::vector<Integer> f, unsigned m) {
    CurveSpec c;
    c.family = Family::Superelliptic;
    c.f = std::move(f);
    c.m = m;
    return c;
}

CurveSpec CurveSpec::thue(std::vector<Rational> roots, Rational k) {
    CurveSpec c;
    c.family = Family::ThueClassic;
    c.roots = std::move(roots);
    c.thue_k = std::move(k);
    return c;
}

CurveSpec CurveSpec::siegel(Rational a1, Rational a2, SContext s) {
    CurveSpec c;
    c.family = Family::SiegelUnits;
    c.a1 = std::move(a1);
    c.a2 = std::move(a2);
    c.s = std::move(s);
    return c;
}

namespace {

Poly as_poly(const std::vector<Integer>& f) {
    if (f.empty() || f.front() == 0) throw std::invalid_argument("f needs a nonzero leading coefficient");
    return Poly::from_descending(std::vector<Rational>(f.begin(), f.end()));
}

}  // namespace

void CurveSpec::validate() const {
    switch (family) {
        case Family::Mordell:
            if (k == 0) throw std::invalid_argument("Mordell equation needs k != 0");
            return;
        case Family::Elliptic: {
            const Poly p = as_poly(f);
            if (p.degree() != 3) throw std::invalid_argument("elliptic curve needs deg f = 3");
            if (discriminant(p).is_zero()) throw std::invalid_argument("f has a repeated root");
            return;
        }
        case Family::Hyperelliptic: {
            const Poly p = as_poly(f);
            int simple = 0;
            for (const auto& [g, mult] : squarefree_decomposition(p))
                if (mult == 1) simple += g.degree();
            if (simple < 3) throw std::invalid_argument("f needs at least three simple roots");
            return;
        }
        case Family::Superelliptic: {
            if (m < 3) throw std::invalid_argument("superelliptic exponent must be at least 3");
            const Poly p = as_poly(f);
            int coprime = 0;
            for (const auto& [g, mult] : squarefree_decomposition(p))
                if (std::gcd(static_cast<unsigned>(mult), m) == 1) coprime += g.degree();
            if (coprime < 2) throw std::invalid_argument("f needs two distinct roots of multiplicity prime to m");
            return;
        }
        case Family::ThueClassic: {
            std::set<Rational> distinct;
            for (const auto& a : roots) distinct.insert(a);
            if (distinct.size() < 3) throw std::invalid_argument("Thue equation needs at least three distinct roots");
            if (thue_k.is_zero()) throw std::invalid_argument("Thue equation needs k != 0");
            return;
        }
        case Family::SiegelUnits:
            if (a1.is_zero() || a2.is_zero()) throw std::invalid_argument("unit equation needs a1 a2 != 0");
            return;
    }
}

namespace {

Integer eval_int(const std::vector<Integer>& f, const Integer& x) {
    Integer acc = 0;
    for (const auto& c : f) acc = acc * x + c;
    return acc;
}

// y with y^m = v, if any.
std::optional<Integer> exact_root(const Integer& v, unsigned m) {
    if (v < 0 && m % 2 == 0) return std::nullopt;
    Integer r;
    const Integer a = abs(v);
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), m) == 0) return std::nullopt;
    return v < 0 ? Integer(-r) : r;
}

void push_power_roots(std::vector<CurvePoint>& out, const Integer& x, const Integer& v, unsigned m) {
    const auto y = exact_root(v, m);
    if (!y) return;
    out.emplace_back(Rational(x), Rational(*y));
    if (m % 2 == 0 && *y != 0) out.emplace_back(Rational(x), Rational(Integer(-*y)));
}

Rational thue_value(const std::vector<Rational>& roots, const Rational& x, const Rational& y) {
    Rational v = 1;
    for (const auto& a : roots) v *= x - a * y;
    return v;
}

}  // namespace

bool on_curve(const CurveSpec& spec, const CurvePoint& p) {
    const auto& [x, y] = p;
    switch (spec.family) {
        case Family::Mordell: return y * y == x.pow(3) + Rational(spec.k);
        case Family::Elliptic:
        case Family::Hyperelliptic:
        case Family::Superelliptic: {
            Rational fx;
            for (const auto& c : spec.f) fx = fx * x + Rational(c);
            return y.pow(spec.family == Family::Superelliptic ? spec.m : 2) == fx;
        }
        case Family::ThueClassic: return thue_value(spec.roots, x, y) == spec.thue_k;
        case Family::SiegelUnits:
            return is_s_unit(x, spec.s) && is_s_unit(y, spec.s) && spec.a1 * x + spec.a2 * y == Rational(1);
    }
    return false;
}

std::vector<CurvePoint> enumerate_points(const CurveSpec& spec, long box, std::size_t cap) {
    spec.validate();
    if (box < 0) throw std::invalid_argument("box must be nonnegative");
    std::vector<CurvePoint> out;
    std::size_t scanned = 0;
    const auto tick = [&] {
        if (++scanned > cap) throw CapExceeded(cap, out.size());
    };
    switch (spec.family) {
        case Family::Mordell:
            for (long x = -box; x <= box; ++x) {
                tick();
                const Integer xi(x);
                push_power_roots(out, xi, xi * xi * xi + spec.k, 2);
            }
            break;
        case Family::Elliptic:
        case Family::Hyperelliptic:
        case Family::Superelliptic: {
            const unsigned m = spec.family == Family::Superelliptic ? spec.m : 2;
            for (long x = -box; x <= box; ++x) {
                tick();
                const Integer xi(x);
                push_power_roots(out, xi, eval_int(spec.f, xi), m);
            }
            break;
        }
        case Family::ThueClassic:
            for (long x = -box; x <= box; ++x)
                for (long y = -box; y <= box; ++y) {
                    tick();
                    if (thue_value(spec.roots, Rational(x), Rational(y)) == spec.thue_k)
                        out.emplace_back(Rational(x), Rational(y));
                }
            break;
        case Family::SiegelUnits:
            for (const auto& e1 : enumerate_s_units(spec.s, static_cast<unsigned>(box), cap)) {
                tick();
                const Rational e2 = (Rational(1) - spec.a1 * e1) / spec.a2;
                if (in_unit_box(e2, spec.s, static_cast<unsigned>(box))) out.emplace_back(e1, e2);
            }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dioph
