#include "dioph/sarith.hpp"

#include "dioph/detail/odometer.hpp"

#include <algorithm>
#include <sstream>

namespace dioph {

namespace {

constexpr unsigned long kTrialLimit = 1u << 16;

Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    const Integer c = seed;
    Integer y = seed + 1, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
        v = (v * v + c) % n;
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                step(y);
                q = (q * ::abs(Integer(x - y))) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            step(ys);
            Integer diff = ::abs(Integer(x - ys));
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (unsigned long seed = 1;; ++seed) {
        const Integer d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Integer> prime_factors(Integer n) {
    n = ::abs(n);
    std::vector<Integer> out;
    if (n <= 1) return out;
    for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) factor_into(n, out);
    std::sort(out.begin(), out.end(), [](const Integer& a, const Integer& b) { return a < b; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SContext::SContext(std::vector<Integer> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end(), [](const Integer& a, const Integer& b) { return a < b; });
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i])) throw std::invalid_argument("not a prime: " + primes_[i].get_str());
        if (i > 0 && primes_[i] == primes_[i - 1])
            throw std::invalid_argument("duplicate prime: " + primes_[i].get_str());
    }
}

SContext::SContext(std::initializer_list<long> primes)
    : SContext(std::vector<Integer>(primes.begin(), primes.end())) {}

bool SContext::contains(const Integer& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p,
                              [](const Integer& a, const Integer& b) { return a < b; });
}

SContext SContext::united(const SContext& other) const {
    std::vector<Integer> all = primes_;
    for (const auto& p : other.primes_)
        if (!contains(p)) all.push_back(p);
    return SContext(std::move(all));
}

std::string SContext::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << primes_[i].get_str();
    os << '}';
    return os.str();
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::NotSInteger: return "NotSInteger";
        case Membership::SInteger: return "SInteger";
        case Membership::SUnit: return "SUnit";
    }
    return "?";
}

long valuation(const Rational& x, const Integer& p) {
    if (x.is_zero()) throw std::domain_error("valuation of zero undefined");
    if (p < 2) throw std::invalid_argument("valuation base must be prime");
    Integer rest;
    const auto up = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.raw().get_num_mpz_t(), p.get_mpz_t()));
    const auto down = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.raw().get_den_mpz_t(), p.get_mpz_t()));
    return up - down;
}

namespace {

// Removes every prime of s from |n|; returns what is left.
Integer strip(const Integer& n, const SContext& s) {
    Integer rest = ::abs(n);
    for (const auto& p : s.primes()) mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    return rest;
}

}  // namespace

Membership s_membership(const Rational& x, const SContext& s) {
    if (strip(x.den(), s) != 1) return Membership::NotSInteger;
    if (x.is_zero() || strip(x.num(), s) != 1) return Membership::SInteger;
    return Membership::SUnit;
}

Rational SUnit::value(const SContext& s) const {
    if (exponents.size() != s.size()) throw std::invalid_argument("exponent vector does not match context");
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), s.primes()[i].get_mpz_t(), static_cast<unsigned long>(std::labs(exponents[i])));
        if (exponents[i] >= 0) num *= pw;
        else den *= pw;
    }
    return Rational(sign < 0 ? Integer(-num) : num, den);
}

std::optional<SUnit> SUnit::decompose(const Rational& x, const SContext& s) {
    if (!is_s_unit(x, s)) return std::nullopt;
    SUnit u;
    u.sign = x.sign();
    u.exponents.reserve(s.size());
    for (const auto& p : s.primes()) u.exponents.push_back(valuation(x, p));
    return u;
}

long SUnit::max_abs_exponent() const {
    long m = 0;
    for (long e : exponents) m = std::max(m, std::labs(e));
    return m;
}

bool in_unit_box(const Rational& x, const SContext& s, unsigned bound) {
    if (x.is_zero()) return false;
    const auto u = SUnit::decompose(x, s);
    return u && u->max_abs_exponent() <= static_cast<long>(bound);
}

std::vector<Rational> enumerate_s_units(const SContext& s, unsigned bound, std::size_t cap) {
    const std::size_t width = 2 * static_cast<std::size_t>(bound) + 1;
    std::size_t total = 2;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (total > cap / width + 1) throw CapExceeded(cap, 0);
        total *= width;
    }
    if (total > cap) throw CapExceeded(cap, 0);

    std::vector<Rational> out;
    out.reserve(total);
    const long b = static_cast<long>(bound);
    for (int sign : {-1, 1}) {
        SUnit u{sign, std::vector<long>(s.size(), -b)};
        do {
            out.push_back(u.value(s));
        } while (detail::advance(u.exponents, -b, b));
    }
    return out;
}

SContext extend_s(const SContext& s, std::span<const Rational> values) {
    std::vector<Integer> extra;
    for (const auto& v : values) {
        if (v.is_zero()) throw std::invalid_argument("extend_s: zero value has no finite support");
        for (const Integer* part : {&v.raw().get_num(), &v.raw().get_den()}) {
            for (auto& p : prime_factors(strip(*part, s))) extra.push_back(std::move(p));
        }
    }
    std::sort(extra.begin(), extra.end(), [](const Integer& a, const Integer& b) { return a < b; });
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    return s.united(SContext(std::move(extra)));
}

SContext extend_s(const SContext& s, std::initializer_list<Rational> values) {
    return extend_s(s, std::span<const Rational>(values.begin(), values.size()));
}

}  // namespace dioph
