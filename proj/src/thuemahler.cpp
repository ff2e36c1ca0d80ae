#include "dioph/thuemahler.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

BinaryFormSpec BinaryFormSpec::split(std::array<Rational, 3> roots, std::vector<Rational> cofactor, Rational k) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (roots[i] == roots[j]) throw std::invalid_argument("duplicate roots");
    if (k.is_zero()) throw std::invalid_argument("k must be nonzero");
    if (cofactor.empty() || std::all_of(cofactor.begin(), cofactor.end(), [](const Rational& c) { return c.is_zero(); }))
        throw std::invalid_argument("cofactor must be nonzero");
    BinaryFormSpec f;
    f.kind_ = FormKind::Split;
    f.roots_ = std::move(roots);
    f.cofactor_ = std::move(cofactor);
    f.k_ = std::move(k);
    return f;
}

BinaryFormSpec BinaryFormSpec::xy_x_minus_y(Rational k) {
    if (k.is_zero()) throw std::invalid_argument("k must be nonzero");
    BinaryFormSpec f;
    f.kind_ = FormKind::XYXminusY;
    f.roots_ = {Rational(0), Rational(1), Rational(0)};
    f.k_ = std::move(k);
    return f;
}

Rational BinaryFormSpec::cofactor_at(const Rational& x, const Rational& y) const {
    const long e = static_cast<long>(cofactor_.size()) - 1;
    Rational sum;
    for (long i = 0; i <= e; ++i) {
        const auto& c = cofactor_[static_cast<std::size_t>(i)];
        if (!c.is_zero()) sum += c * x.pow(e - i) * y.pow(i);
    }
    return sum;
}

Integer BinaryFormSpec::cofactor_denominator() const {
    Integer d = 1;
    for (const auto& c : cofactor_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.den().get_mpz_t());
    return d;
}

Rational eval_form(const BinaryFormSpec& f, const Rational& x, const Rational& y) {
    if (f.kind() == FormKind::XYXminusY) return x * y * (x - y);
    Rational v = f.cofactor_at(x, y);
    for (const auto& a : f.roots()) v *= x - a * y;
    return v;
}

std::optional<TMSolution> class_solution(const BinaryFormSpec& f, const SContext& s, const ProjPoint& point) {
    if (point.size() != 2) throw std::invalid_argument("class_solution expects a point of P^1");
    const Rational x(point[0]);
    const Rational y(point[1]);
    const Rational r = eval_form(f, x, y) / f.k();
    if (r.is_zero()) return std::nullopt;
    // eta must clear the negative valuations of r outside S; positive ones cannot be removed.
    Rational eta = 1;
    const long n = f.degree();
    for (const Integer& part : {r.num(), r.den()}) {
        for (const auto& p : prime_factors(abs(part))) {
            if (s.contains(p)) continue;
            const long v = valuation(r, p);
            if (v > 0 || -v % n != 0) return std::nullopt;
            eta *= Rational(p).pow(-v / n);
        }
    }
    return TMSolution{x * eta, y * eta, r * eta.pow(n), point};
}

std::vector<TMSolution> solve_thue_mahler(const BinaryFormSpec& f, const SContext& s, unsigned long height,
                                          std::size_t cap) {
    if (height < 1) throw std::invalid_argument("height bound must be >= 1");
    std::vector<TMSolution> out;
    std::size_t scanned = 0;
    const long h = static_cast<long>(height);
    Integer g;
    for (long a = 0; a <= h; ++a) {
        for (long b = -h; b <= h; ++b) {
            if (a == 0 && b != 1) continue;
            mpz_gcd_ui(g.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b < 0 ? -b : b));
            if (g != 1) continue;
            if (++scanned > cap) throw CapExceeded(cap, out.size());
            if (auto sol = class_solution(f, s, ProjPoint{a, b})) out.push_back(std::move(*sol));
        }
    }
    std::sort(out.begin(), out.end(), [](const TMSolution& u, const TMSolution& v) { return u.point < v.point; });
    return out;
}

bool classes_equivalent(const TMSolution& a, const TMSolution& b, int degree, const SContext& s) {
    if (a.point != b.point) return false;
    const Rational eta = a.x.is_zero() ? b.y / a.y : b.x / a.x;
    if (!is_s_unit(eta, s)) throw std::logic_error("class witness " + eta.to_string() + " is not an S-unit");
    if (b.eps != eta.pow(degree) * a.eps) throw std::logic_error("class witness does not relate the units");
    return true;
}

namespace {

void require_split(const BinaryFormSpec& f) {
    if (f.kind() != FormKind::Split) throw std::invalid_argument("operation needs a form with three finite roots");
}

bool is_constant_cofactor(const BinaryFormSpec& f) { return f.cofactor().size() == 1; }

ShearResult carry(const BinaryFormSpec& target, const QMatrix& m, SContext delta, const std::vector<TMSolution>& sols,
                  const SContext& s) {
    const SContext wide = s.united(delta);
    ShearResult res{target, m, {}, std::move(delta)};
    for (const auto& sol : sols) {
        const QVector v = m.apply(QVector{sol.x, sol.y});
        const Rational value = eval_form(target, v[0], v[1]);
        if (value.is_zero()) throw std::logic_error("transported solution lies on a root of the target");
        const Rational eps = value / target.k();
        if (!is_s_integer(v[0], wide) || !is_s_integer(v[1], wide) || !is_s_unit(eps, wide))
            throw std::logic_error("transported solution fails on the target form");
        res.solutions.push_back({v[0], v[1], eps, ProjPoint(std::span<const Rational>(v))});
    }
    return res;
}

}  // namespace

ShearResult shear_transform(const BinaryFormSpec& f, ShearDirection direction, const std::vector<TMSolution>& sols,
                            const SContext& s) {
    const BinaryFormSpec target = BinaryFormSpec::xy_x_minus_y(f.k());
    if (direction == ShearDirection::IToII) {
        require_split(f);
        auto sorted = f.roots();
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<Rational, 3>{Rational(-1), Rational(0), Rational(1)} || !is_constant_cofactor(f))
            throw std::invalid_argument("source must be c X(X-Y)(X+Y)");
        // X' = X - Y, Y' = X + Y read backwards: (X, Y) = ((X'+Y')/2, (Y'-X')/2).
        const Rational half(1, 2);
        const QMatrix m({{half, half}, {-half, half}});
        // X'(X'-Y')(X'+Y') = -4 XY(X-Y), so units pick up the primes of 4c.
        SContext delta = extend_s(SContext{}, {Rational(4), f.cofactor().front()});
        return carry(target, m, std::move(delta), sols, s);
    }
    if (f.kind() == FormKind::XYXminusY) return {f, QMatrix::identity(2), sols, SContext{}};
    const auto& a = f.roots();
    const Rational u = a[1] - a[2];
    const Rational w = a[0] - a[2];
    const QMatrix m({{u, -u * a[0]}, {w, -w * a[1]}});
    if (m.determinant().is_zero()) throw std::domain_error("singular coordinate change");
    SContext delta = transport_context(f, SContext{}).united(coordinate_delta(m));
    return carry(target, m, std::move(delta), sols, s);
}

Rational siegel_residue(const std::array<Rational, 3>& roots, const Rational& x, const Rational& y) {
    const auto& a = roots;
    const Rational b1 = x - a[0] * y;
    const Rational b2 = x - a[1] * y;
    const Rational b3 = x - a[2] * y;
    return (a[0] - a[1]) * b3 + (a[1] - a[2]) * b1 + (a[2] - a[0]) * b2;
}

SContext transport_context(const BinaryFormSpec& f, const SContext& s) {
    std::vector<Rational> values{f.k()};
    if (f.kind() == FormKind::Split) {
        const Integer d = f.cofactor_denominator();
        values.emplace_back(d);
        const auto& a = f.roots();
        for (int i = 0; i < 3; ++i) {
            if (!a[i].is_zero()) values.push_back(a[i]);
            for (int j = i + 1; j < 3; ++j) values.push_back(a[i] - a[j]);
        }
        for (const auto& c : f.cofactor())
            if (!c.is_zero()) values.push_back(c * Rational(d));
    }
    return extend_s(s, values);
}

TMSolution transport_unit_to_thue(const BinaryFormSpec& f, const Rational& gamma, const Rational& eta) {
    require_split(f);
    if (eta.is_zero()) throw std::invalid_argument("eta must be nonzero");
    const auto& a = f.roots();
    const Rational diff = a[0] - a[1];
    const Rational x0 = (a[0] * gamma - a[1]) / diff;
    const Rational y0 = (gamma - 1) / diff;
    const Rational value = eval_form(f, x0, y0);
    if (value.is_zero()) throw std::domain_error("gamma yields root of F");
    const Rational eps = value / f.k() * eta.pow(f.degree());
    const Rational x = x0 * eta;
    const Rational y = y0 * eta;
    if (eval_form(f, x, y) != f.k() * eps) throw std::logic_error("transported triple fails F(x,y) = k eps");
    return {x, y, eps, ProjPoint(std::vector<Rational>{x, y})};
}

UnitImage transport_thue_to_unit(const BinaryFormSpec& f, const TMSolution& sol, const SContext& s) {
    require_split(f);
    const auto& a = f.roots();
    std::array<Rational, 3> beta;
    for (int i = 0; i < 3; ++i) beta[i] = sol.x - a[i] * sol.y;
    if (beta[0].is_zero()) throw std::domain_error("x = a1 y");
    const SContext wide = transport_context(f, s);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int k = 3 - i - j;
            if (!is_s_unit((a[i] - a[j]) * beta[k], wide))
                throw std::logic_error("(a_i - a_j) b_k is not a unit over " + wide.to_string());
        }
    return {beta, beta[1] / beta[0]};
}

std::vector<Hyperplane> zero_one_infinity() { return {Hyperplane{1, 0}, Hyperplane{0, 1}, Hyperplane{1, -1}}; }

ProjPoint unit_to_point(const Rational& e1, const Rational& e2, const SContext& s) {
    if (e1 + e2 != 1) throw std::invalid_argument("units must sum to 1");
    if (!is_s_unit(e1, s) || !is_s_unit(e2, s)) throw std::invalid_argument("both terms must be S-units");
    return ProjPoint(std::vector<Rational>{e1, Rational(1)});
}

Rational point_to_unit(const ProjPoint& p, const SContext& s) {
    if (p.size() != 2) throw std::invalid_argument("point_to_unit expects a point of P^1");
    const auto lines = zero_one_infinity();
    if (!is_s_integral(p, lines, s)) throw std::invalid_argument("point is not S-integral on P^1 minus {0,1,oo}");
    return Rational(p[0], p[1]);
}

}  // namespace dioph
