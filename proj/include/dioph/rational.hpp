#pragma once

// Exact rational scalar used everywhere in dioph.
//
// Backed by GMP. Values are always kept in lowest terms with a positive
// denominator, so equality and hashing are structural and zero is 0/1.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dioph {

using Integer = mpz_class;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    /// Parses "n", "-n", "n/d" (decimal, optional sign on the numerator).
    /// Throws std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    /// Throws std::domain_error for zero.
    Rational inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long exponent) const;

    std::string to_string() const { return value_.get_str(10); }
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    std::size_t hash() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Three-way comparison of big integers, usable with std::sort.
inline std::strong_ordering compare(const Integer& a, const Integer& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

Integer parse_integer(std::string_view text);

}  // namespace dioph

template <>
struct std::hash<dioph::Rational> {
    std::size_t operator()(const dioph::Rational& r) const noexcept { return r.hash(); }
};
