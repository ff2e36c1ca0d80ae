#include "dioph/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dioph {

namespace {

constexpr mpfr_prec_t kGuard = 32;

mpfr_prec_t precision_cap(mpfr_prec_t requested) { return std::max<mpfr_prec_t>(requested * 16, 512); }

void check_coefficients(std::span<const Integer> c) {
    if (c.size() < 2) throw std::invalid_argument("polynomial must have degree at least 1");
    if (c.front() <= 0) throw std::invalid_argument("leading coefficient must be positive");
}

Poly to_poly(std::span<const Integer> c) { return Poly::from_descending(std::vector<Rational>(c.begin(), c.end())); }

Interval constant(const Integer& a, mpfr_prec_t w) { return Interval::from_rational(Rational(a), w); }

ComplexInterval constant_c(const Integer& a, mpfr_prec_t w) {
    return {constant(a, w), Interval::from_rational(Rational(0), w)};
}

Interval horner_derivative(std::span<const Integer> c, const Interval& x) {
    const mpfr_prec_t w = x.precision();
    const std::size_t d = c.size() - 1;
    Interval acc = constant(c[0] * static_cast<long>(d), w);
    for (std::size_t i = 1; i < d; ++i) acc = acc * x + constant(c[i] * static_cast<long>(d - i), w);
    return acc;
}

ComplexInterval horner(std::span<const Integer> c, const ComplexInterval& z) {
    const mpfr_prec_t w = z.re.precision();
    ComplexInterval acc = constant_c(c[0], w);
    for (std::size_t i = 1; i < c.size(); ++i) acc = acc * z + constant_c(c[i], w);
    return acc;
}

ComplexInterval horner_derivative(std::span<const Integer> c, const ComplexInterval& z) {
    const mpfr_prec_t w = z.re.precision();
    const std::size_t d = c.size() - 1;
    ComplexInterval acc = constant_c(c[0] * static_cast<long>(d), w);
    for (std::size_t i = 1; i < d; ++i) acc = acc * z + constant_c(c[i] * static_cast<long>(d - i), w);
    return acc;
}

bool is_exact_zero(const Interval& x) { return mpfr_zero_p(x.lo().get()) && mpfr_zero_p(x.hi().get()); }

bool is_exact_zero(const ComplexInterval& z) { return is_exact_zero(z.re) && is_exact_zero(z.im); }

ComplexInterval from_doubles(double re, double im, mpfr_prec_t w) {
    Real a(w), b(w);
    mpfr_set_d(a.get(), re, MPFR_RNDN);
    mpfr_set_d(b.get(), im, MPFR_RNDN);
    return {Interval::point(a), Interval::point(b)};
}

// 2^e as a Real
Real power_of_two(long e, mpfr_prec_t w) {
    Real r(w);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

Real max_with_one(const Interval& x) {
    Real r = x.hi();
    if (mpfr_cmp_ui(r.get(), 1) < 0) mpfr_set_ui(r.get(), 1, MPFR_RNDN);
    return r;
}

std::vector<ComplexInterval> aberth(std::span<const Integer> c, mpfr_prec_t w) {
    const std::size_t d = c.size() - 1;
    const double a0 = mpz_get_d(c[0].get_mpz_t());
    const double ad = std::fabs(mpz_get_d(c[d].get_mpz_t()));
    double radius = ad > 0 ? std::pow(ad / a0, 1.0 / static_cast<double>(d)) : 1.0;
    if (!std::isfinite(radius) || radius <= 0) radius = 1.0;
    std::vector<ComplexInterval> z;
    for (std::size_t k = 0; k < d; ++k) {
        const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.7;
        z.push_back(from_doubles(radius * std::cos(t), radius * std::sin(t), w));
    }
    const Real tol = power_of_two(-(static_cast<long>(w) - 8), w);
    const Interval one = Interval::from_rational(Rational(1), w);
    for (int iter = 0; iter < 400 + static_cast<int>(w); ++iter) {
        bool done = true;
        for (std::size_t i = 0; i < d; ++i) {
            const ComplexInterval pz = horner(c, z[i]);
            if (is_exact_zero(pz)) continue;
            try {
                const ComplexInterval n = pz / horner_derivative(c, z[i]);
                ComplexInterval s(w);
                for (std::size_t j = 0; j < d; ++j)
                    if (j != i) s = s + ComplexInterval{one, Interval(w)} / (z[i] - z[j]);
                const ComplexInterval corr = (n / (ComplexInterval{one, Interval(w)} - n * s)).mid();
                z[i] = (z[i] - corr).mid();
                Real scaled(w);
                mpfr_mul(scaled.get(), tol.get(), max_with_one(z[i].abs()).get(), MPFR_RNDN);
                if (mpfr_greater_p(corr.abs().hi().get(), scaled.get())) done = false;
            } catch (const std::domain_error&) {
                // nudge off a critical point or a collision and keep going
                z[i] = (z[i] + from_doubles(1e-3 * static_cast<double>(i + 1), 1e-3, w)).mid();
                done = false;
            }
        }
        if (done) break;
    }
    return z;
}

// Real coefficients: make near-real approximations real and pair the others as exact conjugates.
bool symmetrize(std::vector<ComplexInterval>& z, std::vector<std::size_t>& partner, mpfr_prec_t w) {
    const std::size_t d = z.size();
    partner.assign(d, d);
    const Real snap = power_of_two(-static_cast<long>(w) / 2, w);
    for (std::size_t i = 0; i < d; ++i) {
        Real scaled(w);
        mpfr_mul(scaled.get(), snap.get(), max_with_one(z[i].abs()).get(), MPFR_RNDN);
        if (mpfr_lessequal_p(z[i].im.abs().hi().get(), scaled.get())) {
            z[i].im = Interval(w);
            partner[i] = i;
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (partner[i] != d || mpfr_sgn(z[i].im.lo().get()) <= 0) continue;
        std::size_t best = d;
        double best_dist = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (partner[j] != d || mpfr_sgn(z[j].im.lo().get()) >= 0) continue;
            const double dist = std::hypot(z[i].re.mid().to_double() - z[j].re.mid().to_double(),
                                           z[i].im.mid().to_double() + z[j].im.mid().to_double());
            if (best == d || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        if (best == d) return false;
        z[best] = z[i].conj();
        partner[i] = best;
        partner[best] = i;
    }
    return std::all_of(partner.begin(), partner.end(), [d](std::size_t p) { return p != d; });
}

// Weierstrass inclusion: disks of radius d |W_i| around the approximations contain all roots,
// and disjoint disks contain exactly one root each.
std::optional<std::vector<RootEnclosure>> validate(std::span<const Integer> c, const std::vector<ComplexInterval>& z,
                                                   const std::vector<std::size_t>& partner, mpfr_prec_t w) {
    const std::size_t d = z.size();
    const Interval a0 = constant(c[0], w);
    std::vector<Real> radius;
    for (std::size_t i = 0; i < d; ++i) {
        Interval den = a0;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) den = den * (z[i] - z[j]).abs();
        if (den.contains_zero()) return std::nullopt;
        const Interval wi = horner(c, z[i]).abs() / den;
        Real r(w);
        mpfr_mul_ui(r.get(), wi.hi().get(), d, MPFR_RNDU);
        radius.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            Real sum(w);
            mpfr_add(sum.get(), radius[i].get(), radius[j].get(), MPFR_RNDU);
            if (!mpfr_greater_p((z[i] - z[j]).abs().lo().get(), sum.get())) return std::nullopt;
        }
        if (partner[i] != i && !mpfr_greater_p(z[i].im.abs().lo().get(), radius[i].get())) return std::nullopt;
    }
    std::vector<RootEnclosure> out;
    for (std::size_t i = 0; i < d; ++i) {
        RootEnclosure e;
        e.real = partner[i] == i;
        e.conjugate = partner[i];
        e.value.re = z[i].re.inflate(radius[i]);
        e.value.im = e.real ? Interval(w) : z[i].im.inflate(radius[i]);
        out.push_back(std::move(e));
    }
    return out;
}

struct Nearest {
    std::size_t index;
    bool tie;
    bool decided;
};

// Root (among candidates) closest to q. Overlapping distances count as a tie only when
// allow_tie; otherwise the caller refines.
Nearest nearest_root(const std::vector<Interval>& dist, const std::vector<std::size_t>& candidates,
                     const std::vector<bool>& forced_tie, bool allow_tie) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (mpfr_less_p(dist[i].hi().get(), dist[best].hi().get())) best = i;
    std::size_t chosen = best;
    bool tie = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i == best || mpfr_greater_p(dist[i].lo().get(), dist[best].hi().get())) continue;
        if (!forced_tie[i] && !allow_tie) return {candidates[best], false, false};
        tie = true;
        chosen = std::min(chosen, i);
    }
    return {candidates[chosen], tie, true};
}

Poly reflected(const Poly& f, const Rational& q) {
    // f(2q - X)
    const Poly line({Rational(2) * q, Rational(-1)});
    Poly acc;
    for (int i = f.degree(); i >= 0; --i) acc = acc * line + Poly({f.coeff(static_cast<std::size_t>(i))});
    return acc;
}

Interval abs_power(const Integer& y, std::size_t d, mpfr_prec_t w) {
    return Interval::from_rational(Rational(Integer(abs(y))).pow(static_cast<long>(d)), w);
}

}  // namespace

std::vector<std::size_t> RootSet::real_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i].real) out.push_back(i);
    return out;
}

RootSet isolate_roots(std::span<const Integer> coeffs, mpfr_prec_t precision) {
    check_coefficients(coeffs);
    if (precision < 16) throw std::invalid_argument("precision must be at least 16 bits");
    const Poly f = to_poly(coeffs);
    if (!is_squarefree(f)) throw std::invalid_argument("polynomial is not squarefree");
    RootSet rs;
    rs.coefficients.assign(coeffs.begin(), coeffs.end());
    rs.irreducible = irreducible_over_q(f);
    const std::vector<Rational> rational = rational_roots(f);
    const mpfr_prec_t cap = precision_cap(precision);
    for (mpfr_prec_t w = precision + kGuard; w <= cap + kGuard; w *= 2) {
        std::vector<ComplexInterval> z = aberth(coeffs, w);
        std::vector<std::size_t> partner;
        if (!symmetrize(z, partner, w)) continue;
        auto checked = validate(coeffs, z, partner, w);
        if (!checked) continue;
        auto& roots = *checked;
        for (const auto& r : rational) {
            for (auto& e : roots) {
                if (e.real && e.value.re.contains(r)) {
                    e.exact = r;
                    e.value.re = Interval::from_rational(r, w);
                    break;
                }
            }
        }
        std::vector<std::size_t> order(roots.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const int c = mpfr_cmp(roots[a].value.re.mid().get(), roots[b].value.re.mid().get());
            if (c != 0) return c < 0;
            return mpfr_less_p(roots[a].value.im.mid().get(), roots[b].value.im.mid().get()) != 0;
        });
        std::vector<std::size_t> position(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
        for (std::size_t i : order) {
            RootEnclosure e = roots[i];
            e.conjugate = position[e.conjugate];
            rs.roots.push_back(std::move(e));
        }
        rs.precision = w;
        return rs;
    }
    throw std::runtime_error("root isolation did not validate below the precision cap");
}

Integer eval_homogeneous(std::span<const Integer> coeffs, const Integer& x, const Integer& y) {
    Integer acc = coeffs.empty() ? Integer(0) : coeffs[0];
    Integer ypow = 1;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        ypow *= y;
        acc = acc * x + coeffs[i] * ypow;
    }
    return acc;
}

KappaBound root_bound(const RootSet& rs, std::size_t i, const Integer& k) {
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    const std::size_t d = rs.degree();
    const mpfr_prec_t w = rs.precision;
    const Integer ak = abs(k);
    const ComplexInterval& alpha = rs.roots[i].value;
    const Interval fp = rs.roots[i].real ? horner_derivative(rs.coefficients, alpha.re).abs()
                                         : horner_derivative(rs.coefficients, alpha).abs();
    if (fp.contains_zero()) throw std::domain_error("f'(alpha) is not separated from zero");
    Integer num = ak;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), d - 1);
    KappaBound kb{i, Interval::from_rational(Rational(num), w) / fp, std::nullopt};
    if (d >= 2) {
        std::optional<Interval> closest;
        for (std::size_t j = 0; j < rs.roots.size(); ++j) {
            if (j == i) continue;
            const Interval dist = (alpha - rs.roots[j].value).abs();
            if (!closest) {
                closest = dist;
            } else {
                Real lo = closest->lo(), hi = closest->hi();
                mpfr_min(lo.get(), lo.get(), dist.lo().get(), MPFR_RNDD);
                mpfr_min(hi.get(), hi.get(), dist.hi().get(), MPFR_RNDU);
                closest = Interval::hull(lo, hi);
            }
        }
        Integer top = ak;
        mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), d);
        const Interval q =
            Interval::from_rational(Rational(top), w) / (constant(rs.coefficients[0], w) * closest->pow(d));
        kb.y_floor = q.root(static_cast<unsigned>(d));
    }
    return kb;
}

std::vector<KappaBound> kappa_backward(const RootSet& rs, const Integer& k) {
    std::vector<KappaBound> out;
    for (std::size_t i : rs.real_indices()) out.push_back(root_bound(rs, i, k));
    return out;
}

std::vector<KappaBound> kappa_backward(std::span<const Integer> coeffs, const Integer& k, mpfr_prec_t precision) {
    const mpfr_prec_t cap = precision_cap(precision);
    for (mpfr_prec_t p = precision;; p *= 2) {
        try {
            return kappa_backward(isolate_roots(coeffs, p), k);
        } catch (const std::domain_error&) {
            if (p * 2 > cap) throw;
        }
    }
}

std::string degree_banner(std::size_t degree) {
    if (degree == 1) return "degree 1: F(x,y) = a0 has the infinite family x = n a1 + 1, y = -n a0";
    if (degree == 2) return "degree 2: Pell-type equations can have infinitely many solutions";
    return "";
}

ApproxReport verify_inequality(std::span<const Integer> coeffs, const Integer& k, const Integer& x,
                               const Integer& y, mpfr_prec_t precision) {
    check_coefficients(coeffs);
    if (y == 0) throw std::invalid_argument("y = 0: (x:y) is the point at infinity");
    if (eval_homogeneous(coeffs, x, y) != k) throw std::invalid_argument("F(x, y) differs from k");
    const std::size_t d = coeffs.size() - 1;
    const Rational q(x, y);
    const Poly f = to_poly(coeffs);
    const bool symmetric = gcd(f, reflected(f, q)).degree() > 0;
    const mpfr_prec_t cap = precision_cap(precision);
    for (mpfr_prec_t p = precision;; p *= 2) {
        const bool last = p * 2 > cap;
        const RootSet rs = isolate_roots(coeffs, p);
        const mpfr_prec_t w = rs.precision;
        // one representative per conjugate pair: both are equally far from a real number
        const ComplexInterval target{Interval::from_rational(q, w), Interval(w)};
        std::vector<std::size_t> reps;
        std::vector<Interval> dist;
        for (std::size_t i = 0; i < rs.roots.size(); ++i) {
            if (!rs.roots[i].real && rs.roots[i].conjugate < i) continue;
            reps.push_back(i);
            dist.push_back(rs.roots[i].real ? (rs.roots[i].value.re - target.re).abs()
                                            : (rs.roots[i].value - target).abs());
        }
        const Nearest near = nearest_root(dist, reps, std::vector<bool>(reps.size(), false), symmetric || last);
        if (!near.decided) continue;
        const auto slot = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), near.index) - reps.begin());
        KappaBound kb;
        try {
            kb = root_bound(rs, near.index, k);
        } catch (const std::domain_error&) {
            if (last) throw;
            continue;
        }
        ApproxReport rep{near.index,
                         rs.roots[near.index].real,
                         rs.roots[near.index].value,
                         dist[slot],
                         kb.kappa / abs_power(y, d, w),
                         kb.kappa,
                         Decision::Undecided,
                         kb.y_floor,
                         Decision::False,
                         near.tie,
                         degree_banner(d),
                         w};
        rep.holds = certainly_le(rep.distance, rep.bound);
        if (rep.y_floor) rep.above_floor = certainly_le(*rep.y_floor, abs_power(y, 1, w));
        const bool undecided = rep.holds == Decision::Undecided || rep.above_floor == Decision::Undecided;
        if (!undecided || last) return rep;
    }
}

ForwardReport forward_bound(std::span<const Integer> coeffs, const Rational& kappa, const Rational& pq,
                            mpfr_prec_t precision) {
    check_coefficients(coeffs);
    if (kappa <= Rational(0)) throw std::invalid_argument("kappa must be positive");
    const std::size_t d = coeffs.size() - 1;
    const Integer p = pq.num();
    const Integer q = pq.den();
    if (Rational(q).pow(static_cast<long>(d)) < kappa) throw std::invalid_argument("q^d must be at least kappa");
    ForwardReport rep;
    rep.value = abs(eval_homogeneous(coeffs, p, q));
    const mpfr_prec_t cap = precision_cap(precision);
    for (mpfr_prec_t prec = precision;; prec *= 2) {
        const bool last = prec * 2 > cap;
        const RootSet rs = isolate_roots(coeffs, prec);
        const mpfr_prec_t w = rs.precision;
        const ComplexInterval target{Interval::from_rational(pq, w), Interval(w)};
        std::vector<std::size_t> all(rs.roots.size());
        std::vector<Interval> dist;
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = i;
            dist.push_back((rs.roots[i].value - target).abs());
        }
        // a conjugate pair is always equidistant from a real number
        std::vector<bool> forced(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) forced[i] = !rs.roots[i].real;
        Nearest near = nearest_root(dist, all, forced, last);
        if (!near.decided) continue;
        if (!rs.roots[near.index].real) near.index = std::min(near.index, rs.roots[near.index].conjugate);
        const ComplexInterval& alpha = rs.roots[near.index].value;
        Interval prod = constant(coeffs[0], w) * Interval::from_rational(kappa, w);
        for (std::size_t j = 0; j < rs.roots.size(); ++j)
            if (j != near.index)
                prod = prod * ((alpha - rs.roots[j].value).abs() + Interval::from_rational(Rational(1), w));
        rep.root = near.index;
        rep.bound = prod;
        rep.within = certainly_le(Interval::from_rational(Rational(rep.value), w), prod);
        rep.approximant = certainly_le(
            dist[near.index], Interval::from_rational(kappa / Rational(q).pow(static_cast<long>(d)), w));
        rep.precision = w;
        if ((rep.within != Decision::Undecided && rep.approximant != Decision::Undecided) || last) return rep;
    }
}

std::vector<std::pair<Integer, Integer>> find_thue_solutions(std::span<const Integer> coeffs, const Integer& k,
                                                             long height) {
    check_coefficients(coeffs);
    if (height < 0) throw std::invalid_argument("height must be nonnegative");
    const std::size_t d = coeffs.size() - 1;
    std::vector<std::pair<Integer, Integer>> out;
    Integer largest = abs(k);
    for (const auto& a : coeffs) largest = std::max<Integer>(largest, abs(a));
    Integer size = largest * static_cast<long>(d + 2);
    for (std::size_t i = 0; i < d; ++i) size *= std::max(height, 1L);
    if (mpz_sizeinbase(size.get_mpz_t(), 2) < 120) {
        std::vector<__int128> a;
        for (const auto& c : coeffs) a.push_back(static_cast<__int128>(c.get_si()));
        const auto target = static_cast<__int128>(k.get_si());
        std::vector<__int128> ypow(d + 1);
        for (long y = -height; y <= height; ++y) {
            ypow[0] = 1;
            for (std::size_t i = 1; i <= d; ++i) ypow[i] = ypow[i - 1] * y;
            for (long x = -height; x <= height; ++x) {
                __int128 acc = a[0];
                for (std::size_t i = 1; i <= d; ++i) acc = acc * x + a[i] * ypow[i];
                if (acc == target) out.emplace_back(Integer(x), Integer(y));
            }
        }
    } else {
        for (long y = -height; y <= height; ++y)
            for (long x = -height; x <= height; ++x)
                if (eval_homogeneous(coeffs, Integer(x), Integer(y)) == k) out.emplace_back(Integer(x), Integer(y));
    }
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) {
        const int c = cmp(u.first, v.first);
        return c != 0 ? c < 0 : u.second < v.second;
    });
    return out;
}

std::vector<Rational> convergents(const Interval& x, std::size_t count) {
    Rational a = x.lo().to_rational();
    Rational b = x.hi().to_rational();
    std::vector<Rational> out;
    Integer p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p_{n-1}/q_{n-1}, p_{n-2}/q_{n-2}
    while (out.size() < count) {
        Integer fa, fb;
        mpz_fdiv_q(fa.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
        mpz_fdiv_q(fb.get_mpz_t(), b.num().get_mpz_t(), b.den().get_mpz_t());
        if (fa != fb) break;
        const Integer p = fa * p0 + p1;
        const Integer qn = fa * q0 + q1;
        out.emplace_back(p, qn);
        p1 = p0;
        q1 = q0;
        p0 = p;
        q0 = qn;
        a = a - Rational(fa);
        b = b - Rational(fa);
        if (a.is_zero() || b.is_zero()) break;
        a = a.inverse();
        b = b.inverse();
    }
    return out;
}

}  // namespace dioph
