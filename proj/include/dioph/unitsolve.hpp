#pragma once

// S-unit equations e_0 + ... + e_m = 0 over Q.
//
// solve_unit_equation(n, ...) works in the dictionary with P^n minus n+2
// hyperplanes, so its tuples have n+2 entries: n = 1 is the classical
// e_1 + e_2 = 1, stored homogeneously as (e_1, e_2, -1).

#include "dioph/projective.hpp"
#include "dioph/rational.hpp"
#include "dioph/sarith.hpp"

#include <cstddef>
#include <vector>

namespace dioph {

/// Nonzero S-units summing to zero.
class UnitTuple {
public:
    /// Throws std::invalid_argument when an entry is not an S-unit or the sum is nonzero.
    UnitTuple(std::vector<Rational> entries, SContext context);

    const std::vector<Rational>& entries() const { return entries_; }
    const SContext& context() const { return context_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const UnitTuple&, const UnitTuple&) = default;

private:
    std::vector<Rational> entries_;
    SContext context_;
};

/// Class modulo O_S^x, represented with entry 0 equal to 1.
class ClassRep {
public:
    /// Divides by entry 0; the quotient of two S-units is an S-unit, so this is a complete invariant.
    explicit ClassRep(const UnitTuple& t);

    const UnitTuple& tuple() const { return tuple_; }
    const std::vector<Rational>& entries() const { return tuple_.entries(); }

    friend bool operator==(const ClassRep&, const ClassRep&) = default;
    friend bool operator<(const ClassRep& a, const ClassRep& b) { return a.entries() < b.entries(); }

private:
    UnitTuple tuple_;
};

/// Index sets I, min_size <= |I| <= size-1, with sum_{i in I} t_i = 0; increasing by bitmask.
std::vector<std::vector<std::size_t>> vanishing_subsums(const std::vector<Rational>& t, std::size_t min_size = 2);

bool is_nondegenerate(const std::vector<Rational>& t, std::size_t min_size = 2);

/// Valid unit-equation solution: all entries S-units, zero sum, no vanishing proper subsum.
bool is_valid_solution(const std::vector<Rational>& t, const SContext& s);

/// Non-degenerate classes of (n+2)-term solutions whose normalized representatives
/// (1, e_1, ..., e_{n+1}) have every exponent in [-bound, bound]. Sorted.
/// Throws CapExceeded when more than cap candidate tuples would be scanned.
std::vector<ClassRep> solve_unit_equation(std::size_t n, const SContext& s, unsigned bound,
                                          std::size_t cap = kDefaultEnumerationCap);

/// Normalized tuples in the same box that do have a vanishing proper subsum (reported, not dropped).
std::vector<std::vector<Rational>> degenerate_unit_solutions(std::size_t n, const SContext& s, unsigned bound,
                                                             std::size_t cap = kDefaultEnumerationCap);

/// The class of (eta*e_0, ..., eta*e_m).
ClassRep rescaled_class(const UnitTuple& t, const Rational& eta);

/// Checks the lifting hypotheses for gamma and t (see lift_gamma). Returns the failure reason or "".
std::string gamma_defect(const Rational& gamma, std::size_t t, const SContext& s);

struct Lift {
    UnitTuple tuple;
    SContext extended;  // S together with the primes of gamma*(gamma - t)
};

/// Lifts a non-degenerate (m+1)-term solution to an (m+1+t)-term one:
/// (g e_0, ..., g e_{m-1}, (g - t) e_m, e_m, ..., e_m) with t trailing copies.
/// Requires gamma an S-integer, not an S-unit, with r/gamma not an S-integer for r = 1..t.
/// Throws std::invalid_argument("invalid gamma") or std::logic_error on a degenerate result.
Lift lift_gamma(const ClassRep& base, const Rational& gamma, std::size_t t, const SContext& s);

/// Terms of the identity (1-e)^m - sum_{j=1}^m (-1)^j C(m,j) e^j - 1 = 0, no preconditions.
std::vector<Rational> binomial_terms(const Rational& eps, unsigned m);

struct BinomialLift {
    UnitTuple tuple;
    bool degenerate;
};

/// (m+2)-term solution built from e and 1-e, over S extended by C(m,j), 1 <= j <= m-1.
/// Throws std::invalid_argument when e or 1-e is not an S-unit or m = 0.
BinomialLift lift_binomial(const Rational& eps, unsigned m, const SContext& s);

Integer binomial(unsigned m, unsigned j);

}  // namespace dioph
