#include "dioph/poly.hpp"

#include "dioph/linalg.hpp"
#include "dioph/sarith.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace dioph {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::from_descending(const std::vector<Rational>& coeffs) {
    return Poly(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::vector<Rational> Poly::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Rational Poly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    const Rational inv = leading().inverse();
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c *= inv;
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& p) {
    std::vector<Rational> v = p.coeffs_;
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lead_inv = b.leading().inverse();
    for (int i = a.degree(); i >= db; --i) {
        const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
        quot[static_cast<std::size_t>(i - db)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool Poly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << '-';
        const Rational a = c.abs();
        if (a != 1 || i == 0) os << a;
        if (i > 0) os << (a != 1 ? "*" : "") << 'X';
        if (i > 1) os << '^' << i;
        first = false;
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const Poly& f) {
    if (f.degree() <= 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() <= 0) return out;
    const Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = Poly::divmod(f, a).first;
    Poly c = Poly::divmod(fp, a).first;
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = Poly::divmod(b, g).first;
        c = Poly::divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Rational resultant(const Poly& f, const Poly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) return f.leading().pow(n);
    if (n == 0) return g.leading().pow(m);
    const auto size = static_cast<std::size_t>(m + n);
    QMatrix syl(size, size);
    const auto fd = f.descending(), gd = g.descending();
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) syl(static_cast<std::size_t>(r), static_cast<std::size_t>(r + j)) = fd[static_cast<std::size_t>(j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            syl(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + j)) = gd[static_cast<std::size_t>(j)];
    return syl.determinant();
}

Rational discriminant(const Poly& f) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant of a constant");
    Rational r = resultant(f, f.derivative()) / f.leading();
    if ((d * (d - 1) / 2) % 2 != 0) r = -r;
    return r;
}

namespace {

// Clears denominators and content: an integer polynomial with the same roots.
std::vector<Integer> primitive_integer(const Poly& f) {
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        v.push_back(c.num() * (l / c.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& x : v) x /= g;
    return v;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    Integer rest = ::abs(n);
    for (const auto& p : prime_factors(rest)) {
        const std::size_t count = divs.size();
        Integer pw = 1;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            pw *= p;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

using ModPoly = std::vector<std::uint64_t>;  // ascending, trimmed

void mod_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
    const std::uint64_t inv = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        const std::uint64_t q = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - q * b[j] % p) % p;
        mod_trim(a);
    }
    return a;
}

ModPoly mod_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    mod_trim(r);
    return mod_rem(std::move(r), m, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    mod_trim(a);
    mod_trim(b);
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: a squarefree f of degree d is irreducible mod p iff gcd(X^{p^i} - X, f) = 1 for i <= d/2.
bool irreducible_mod_p(const ModPoly& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    ModPoly df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * (i % p) % p);
    mod_trim(df);
    if (df.empty() || mod_gcd(f, df, p).size() != 1) return false;
    ModPoly h = mod_rem(ModPoly{0, 1}, f, p);
    for (std::size_t i = 1; i <= d / 2; ++i) {
        // h <- h^p mod f
        ModPoly acc{1}, base = h;
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = mod_mulmod(acc, base, f, p);
            base = mod_mulmod(base, base, f, p);
        }
        h = acc;
        ModPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        mod_trim(diff);
        if (diff.empty() || mod_gcd(f, diff, p).size() != 1) return false;
    }
    return true;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    std::vector<Integer> z = primitive_integer(f);
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(low));
    if (z.size() >= 2) {
        const Poly g(std::vector<Rational>(z.begin(), z.end()));
        for (const auto& q : divisors(z.back()))
            for (const auto& p : divisors(z.front()))
                for (int s : {-1, 1}) {
                    const Rational r(Integer(s * p), q);
                    if (g(r).is_zero()) roots.push_back(r);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::optional<bool> irreducible_over_q(const Poly& f) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("irreducibility of a constant");
    if (d == 1) return true;
    if (!is_squarefree(f)) return false;
    if (!rational_roots(f).empty()) return false;
    if (d <= 3) return true;
    const std::vector<Integer> z = primitive_integer(f);
    for (std::uint64_t p = 2; p < 400; ++p) {
        if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
        if (mpz_divisible_ui_p(z.back().get_mpz_t(), p)) continue;
        ModPoly fp;
        for (const auto& c : z) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
            fp.push_back(r.get_ui());
        }
        if (irreducible_mod_p(fp, p)) return true;
    }
    return std::nullopt;
}

}  // namespace dioph
