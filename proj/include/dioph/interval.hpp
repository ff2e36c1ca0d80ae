#pragma once

// Outward-rounded real and complex interval arithmetic on MPFR.

#include "dioph/rational.hpp"

#include <mpfr.h>

#include <string>

namespace dioph {

/// Owning wrapper around mpfr_t.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    /// Exact value as a rational (MPFR numbers are dyadic). Throws on NaN or infinity.
    Rational to_rational() const;
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

private:
    mpfr_t value_;
};

enum class Decision { True, False, Undecided };

const char* to_string(Decision d);

class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 64);
    /// Smallest representable interval containing q.
    static Interval from_rational(const Rational& q, mpfr_prec_t prec);
    /// Point interval at an exactly representable value.
    static Interval point(const Real& x);
    /// [lo, hi]; throws std::invalid_argument when lo > hi.
    static Interval hull(const Real& lo, const Real& hi);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    Real mid() const;
    /// Upper bound for (hi - lo) / 2.
    Real radius() const;
    /// Upper bound for the distance from m to the farthest endpoint.
    Real deviation_from(const Real& m) const;
    Interval abs() const;
    Interval sqr() const;
    /// Throws std::domain_error when the interval has negative points.
    Interval sqrt() const;
    Interval pow(unsigned e) const;
    /// Enclosure of x^(1/n) for x >= 0.
    Interval root(unsigned n) const;
    /// Widened by r on both sides.
    Interval inflate(const Real& r) const;

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    bool positive() const { return mpfr_sgn(lo_.get()) > 0; }
    bool negative() const { return mpfr_sgn(hi_.get()) < 0; }

    /// Decides a <= b on every point pair; Undecided when the intervals overlap.
    friend Decision certainly_le(const Interval& a, const Interval& b);

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws std::domain_error when b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    std::string to_string(int digits = 20) const;  // "[lo, hi]"

private:
    Real lo_;
    Real hi_;
};

struct ComplexInterval {
    Interval re;
    Interval im;

    explicit ComplexInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    Interval abs() const;
    ComplexInterval conj() const { return {re, -im}; }
    ComplexInterval mid() const;
    /// Upper bound for the distance from mid() to any point of the box.
    Real radius() const;

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

    std::string to_string(int digits = 20) const;
};

}  // namespace dioph
