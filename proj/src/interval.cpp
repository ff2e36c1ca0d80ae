#include "dioph/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(other) {}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Rational Real::to_rational() const {
    if (!mpfr_number_p(value_)) throw std::domain_error("not a finite number");
    if (mpfr_zero_p(value_)) return Rational(0);
    Integer m;
    const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
    Rational r(m);
    const Rational two(2);
    return e >= 0 ? r * two.pow(e) : r / two.pow(-e);
}

std::string Real::to_string(int digits) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

const char* to_string(Decision d) {
    switch (d) {
        case Decision::True: return "true";
        case Decision::False: return "false";
        case Decision::Undecided: return "undecided";
    }
    return "undecided";
}

namespace {

mpfr_prec_t max_prec(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

// lo = min of candidates rounded down, hi = max rounded up; op(r, x, y, rnd)
template <typename Op>
Interval four_corner(const Interval& a, const Interval& b, Op op) {
    const mpfr_prec_t p = max_prec(a, b);
    Real lo(p), hi(p), t(p);
    bool first = true;
    for (const Real* x : {&a.lo(), &a.hi()}) {
        for (const Real* y : {&b.lo(), &b.hi()}) {
            op(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
            op(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return Interval::hull(lo, hi);
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::point(const Real& x) {
    Interval r(x.precision());
    mpfr_set(r.lo_.get(), x.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), x.get(), MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Real& lo, const Real& hi) {
    if (mpfr_greater_p(lo.get(), hi.get())) throw std::invalid_argument("interval with lo > hi");
    Interval r(std::max(lo.precision(), hi.precision()));
    mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
    return r;
}

Real Interval::mid() const {
    Real m(precision());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

Real Interval::radius() const {
    Real r(precision());
    mpfr_sub(r.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDU);
    return r;
}

Real Interval::deviation_from(const Real& m) const {
    Real a(precision()), b(precision());
    mpfr_sub(a.get(), m.get(), lo_.get(), MPFR_RNDU);
    mpfr_sub(b.get(), hi_.get(), m.get(), MPFR_RNDU);
    mpfr_max(a.get(), a.get(), b.get(), MPFR_RNDU);
    return a;
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return -*this;
    Real lo(precision()), hi(precision());
    mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
    mpfr_max(hi.get(), hi.get(), hi_.get(), MPFR_RNDU);
    return hull(lo, hi);
}

Interval Interval::sqr() const {
    const Interval a = abs();
    Real lo(precision()), hi(precision());
    mpfr_sqr(lo.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.hi_.get(), MPFR_RNDU);
    return hull(lo, hi);
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_.get()) < 0) throw std::domain_error("square root of an interval with negative points");
    Real lo(precision()), hi(precision());
    mpfr_sqrt(lo.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi_.get(), MPFR_RNDU);
    return hull(lo, hi);
}

Interval Interval::pow(unsigned e) const {
    Interval r = from_rational(Rational(1), precision());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Interval Interval::root(unsigned n) const {
    if (n == 0) throw std::invalid_argument("zeroth root");
    if (mpfr_sgn(lo_.get()) < 0) throw std::domain_error("root of an interval with negative points");
    Real lo(precision()), hi(precision());
    mpfr_rootn_ui(lo.get(), lo_.get(), n, MPFR_RNDD);
    mpfr_rootn_ui(hi.get(), hi_.get(), n, MPFR_RNDU);
    return hull(lo, hi);
}

Interval Interval::inflate(const Real& r) const {
    Real lo(precision()), hi(precision());
    mpfr_sub(lo.get(), lo_.get(), r.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi_.get(), r.get(), MPFR_RNDU);
    return hull(lo, hi);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_.get(), q.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.raw().get_mpq_t()) >= 0;
}

Decision certainly_le(const Interval& a, const Interval& b) {
    if (mpfr_lessequal_p(a.hi_.get(), b.lo_.get())) return Decision::True;
    if (mpfr_greater_p(a.lo_.get(), b.hi_.get())) return Decision::False;
    return Decision::Undecided;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(max_prec(a, b));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) { return four_corner(a, b, mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by zero");
    return four_corner(a, b, mpfr_div);
}

std::string Interval::to_string(int digits) const {
    return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

Interval ComplexInterval::abs() const {
    if (im.contains_zero() && mpfr_zero_p(im.lo().get()) && mpfr_zero_p(im.hi().get())) return re.abs();
    return (re.sqr() + im.sqr()).sqrt();
}

ComplexInterval ComplexInterval::mid() const { return {Interval::point(re.mid()), Interval::point(im.mid())}; }

Real ComplexInterval::radius() const {
    const ComplexInterval m = mid();
    const Real a = re.deviation_from(m.re.lo());
    const Real b = im.deviation_from(m.im.lo());
    Real r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re - b.re, a.im - b.im}; }

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    const Interval n = b.re.sqr() + b.im.sqr();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

std::string ComplexInterval::to_string(int digits) const {
    return re.to_string(digits) + " + " + im.to_string(digits) + "i";
}

}  // namespace dioph
