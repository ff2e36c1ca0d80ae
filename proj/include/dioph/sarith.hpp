#pragma once

// Arithmetic of S-integers and S-units over Q.
//
// S is the archimedean place plus a finite set of primes; the archimedean
// place is always implicit, so an SContext only stores the primes.

#include "dioph/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Raised when an enumeration would produce more items than its cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t cap, std::size_t produced)
        : std::runtime_error("enumeration cap exceeded"), cap_(cap), produced_(produced) {}
    std::size_t cap() const { return cap_; }
    /// Number of items produced before the cap was hit (a partial result existed).
    std::size_t produced() const { return produced_; }
    bool partial() const { return produced_ > 0; }

private:
    std::size_t cap_;
    std::size_t produced_;
};

/// Finite set of primes, kept strictly increasing.
class SContext {
public:
    SContext() = default;
    /// Sorts the input; throws std::invalid_argument on non-primes or duplicates.
    explicit SContext(std::vector<Integer> primes);
    SContext(std::initializer_list<long> primes);

    const std::vector<Integer>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }
    bool contains(const Integer& p) const;
    SContext united(const SContext& other) const;

    std::string to_string() const;  // "{2,3}"

    friend bool operator==(const SContext&, const SContext&) = default;

private:
    std::vector<Integer> primes_;
};

enum class Membership { NotSInteger, SInteger, SUnit };

const char* to_string(Membership m);

/// Exponent of p in x. Throws std::domain_error("valuation of zero undefined").
long valuation(const Rational& x, const Integer& p);

Membership s_membership(const Rational& x, const SContext& s);
inline bool is_s_unit(const Rational& x, const SContext& s) { return s_membership(x, s) == Membership::SUnit; }
inline bool is_s_integer(const Rational& x, const SContext& s) { return s_membership(x, s) != Membership::NotSInteger; }

/// sign * prod p_i^{e_i} over the primes of a context.
struct SUnit {
    int sign = 1;
    std::vector<long> exponents;

    Rational value(const SContext& s) const;
    /// Exponent vector of x if it is an S-unit.
    static std::optional<SUnit> decompose(const Rational& x, const SContext& s);
    long max_abs_exponent() const;

    friend bool operator==(const SUnit&, const SUnit&) = default;
    friend auto operator<=>(const SUnit&, const SUnit&) = default;
};

/// All +-prod p_i^{e_i} with |e_i| <= bound, each once, ordered by (sign, exponent vector).
std::vector<Rational> enumerate_s_units(const SContext& s, unsigned bound,
                                        std::size_t cap = kDefaultEnumerationCap);

/// True when x is an S-unit whose exponents all lie in [-bound, bound].
bool in_unit_box(const Rational& x, const SContext& s, unsigned bound);

/// S together with every prime dividing a numerator or denominator of values.
SContext extend_s(const SContext& s, std::span<const Rational> values);
SContext extend_s(const SContext& s, std::initializer_list<Rational> values);

/// Distinct prime divisors of |n| in increasing order (empty for 0 and +-1).
std::vector<Integer> prime_factors(Integer n);

bool is_prime(const Integer& n);

}  // namespace dioph
