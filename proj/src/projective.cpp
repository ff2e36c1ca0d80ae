#include "dioph/projective.hpp"

#include <algorithm>
#include <sstream>

namespace dioph {

namespace {

IVector canonical(const IVector& raw) {
    Integer g = 0;
    for (const auto& x : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw std::invalid_argument("not a projective point");
    IVector out = raw;
    const auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

IVector clear_denominators(std::span<const Rational> raw) {
    Integer l = 1;
    for (const auto& r : raw) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den().get_mpz_t());
    IVector out;
    out.reserve(raw.size());
    for (const auto& r : raw) out.push_back(r.num() * (l / r.den()));
    return out;
}

Integer mod_inverse(const Integer& a, const Integer& p) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("not invertible modulo p");
    return inv;
}

}  // namespace

ProjPoint::ProjPoint(std::span<const Rational> raw) {
    if (raw.empty()) throw std::invalid_argument("not a projective point");
    coords_ = canonical(clear_denominators(raw));
}

ProjPoint::ProjPoint(const IVector& raw) {
    if (raw.empty()) throw std::invalid_argument("not a projective point");
    coords_ = canonical(raw);
}

ProjPoint::ProjPoint(std::initializer_list<long> raw) : ProjPoint(IVector(raw.begin(), raw.end())) {}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i].get_str();
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        const auto c = compare(a.coords_[i], b.coords_[i]);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

ProjPoint normalize(std::span<const Rational> raw) { return ProjPoint(raw); }

Integer evaluate(const Hyperplane& h, const ProjPoint& p) {
    if (h.size() != p.size()) throw std::invalid_argument("hyperplane and point dimensions differ");
    Integer s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += h[i] * p[i];
    return s;
}

ResiduePoint reduce_mod_p(const ProjPoint& p, const Integer& prime) {
    if (!is_prime(prime)) throw std::invalid_argument("reduction modulus must be prime");
    // Coordinate of maximal p-adic absolute value = minimal valuation among nonzero entries.
    std::size_t pivot = p.size();
    long best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        const long v = valuation(Rational(p[i]), prime);
        if (pivot == p.size() || v < best) {
            pivot = i;
            best = v;
        }
    }
    const Rational scale = Rational(p[pivot]).inverse();
    ResiduePoint r{prime, {}};
    r.coords.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rational y = Rational(p[i]) * scale;  // p-integral by choice of pivot
        Integer res = y.num() * mod_inverse(y.den(), prime);
        mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), prime.get_mpz_t());
        r.coords.push_back(std::move(res));
    }
    const auto first = std::find_if(r.coords.begin(), r.coords.end(), [](const Integer& x) { return x != 0; });
    const Integer inv = mod_inverse(*first, prime);
    for (auto& x : r.coords) {
        x *= inv;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
    }
    return r;
}

bool reduction_meets(const ProjPoint& p, const Hyperplane& h, const Integer& prime) {
    const ResiduePoint rp = reduce_mod_p(p, prime);
    const ResiduePoint rh = reduce_mod_p(h, prime);
    Integer s = 0;
    for (std::size_t i = 0; i < rp.coords.size(); ++i) s += rp.coords[i] * rh.coords[i];
    return mpz_divisible_p(s.get_mpz_t(), prime.get_mpz_t()) != 0;
}

bool is_s_integral(const ProjPoint& p, std::span<const Hyperplane> arrangement, const SContext& s) {
    if (arrangement.empty()) throw std::invalid_argument("empty arrangement");
    bool integral = true;
    for (const auto& h : arrangement) {
        const Integer v = evaluate(h, p);
        if (v == 0) throw PointOnDivisor();
        if (!is_s_unit(Rational(v), s)) integral = false;
    }
    return integral;
}

bool is_s_integral_local(const ProjPoint& p, std::span<const Hyperplane> arrangement, const SContext& s,
                         unsigned long prime_bound) {
    if (arrangement.empty()) throw std::invalid_argument("empty arrangement");
    for (const auto& h : arrangement)
        if (evaluate(h, p) == 0) throw PointOnDivisor();
    for (unsigned long q = 2; q <= prime_bound; ++q) {
        const Integer prime(q);
        if (!is_prime(prime) || s.contains(prime)) continue;
        for (const auto& h : arrangement)
            if (reduction_meets(p, h, prime)) return false;
    }
    return true;
}

SContext coordinate_delta(const QMatrix& m) {
    const Rational det = m.determinant();
    if (det.is_zero()) throw std::domain_error("singular coordinate change");
    std::vector<Rational> support{det};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) support.emplace_back(m(r, c).den());
    return extend_s(SContext{}, support);
}

CoordinateChange change_coordinates(const ProjPoint& p, const QMatrix& m) {
    if (!m.square() || m.rows() != p.size()) throw std::invalid_argument("matrix does not act on this space");
    SContext delta = coordinate_delta(m);
    const QVector image = m.apply(p.rationals());
    return {ProjPoint(std::span<const Rational>(image)), std::move(delta)};
}

Hyperplane transform_hyperplane(const Hyperplane& h, const QMatrix& m) {
    const QVector a = m.inverse().apply_left(h.rationals());
    return Hyperplane(std::span<const Rational>(a));
}

ProjPoint quadratic_embed(const ProjPoint& a, const ProjPoint& b) {
    if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("quadratic_embed expects points of P^1");
    return ProjPoint(IVector{a[0] * b[0], a[1] * b[0], a[0] * b[1], a[1] * b[1]});
}

ProjPoint project_from_last(const ProjPoint& p) {
    if (p.size() < 2) throw std::invalid_argument("cannot project a point of P^0");
    IVector head(p.coords().begin(), p.coords().end() - 1);
    if (std::all_of(head.begin(), head.end(), [](const Integer& x) { return x == 0; }))
        throw std::domain_error("projection centre is not defined at (0:...:0:1)");
    return ProjPoint(head);
}

std::vector<Hyperplane> standard_arrangement(std::size_t n) {
    std::vector<Hyperplane> out;
    for (std::size_t i = 0; i <= n; ++i) {
        IVector e(n + 1, 0);
        e[i] = 1;
        out.emplace_back(e);
    }
    out.emplace_back(IVector(n + 1, 1));
    return out;
}

}  // namespace dioph
