#pragma once

// Thue equations F(x,y) = k for an integer polynomial f = a0 X^d + ... + ad and
// the matching rational approximations |alpha - x/y| <= kappa / |y|^d, with every
// analytic comparison made in outward-rounded interval arithmetic.

#include "dioph/interval.hpp"
#include "dioph/poly.hpp"
#include "dioph/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dioph {

using IntCoeffs = std::vector<Integer>;  // (a0, ..., ad), highest degree first

struct RootEnclosure {
    ComplexInterval value;  // contains exactly one root
    bool real = false;
    std::optional<Rational> exact;
    std::size_t conjugate = 0;  // index of the complex conjugate; itself when real
};

struct RootSet {
    IntCoeffs coefficients;
    std::optional<bool> irreducible;
    std::vector<RootEnclosure> roots;  // by real part, then imaginary part
    mpfr_prec_t precision = 0;         // working precision that validated the enclosures

    std::size_t degree() const { return coefficients.size() - 1; }
    std::vector<std::size_t> real_indices() const;
};

/// Validated enclosures of all complex roots. Requires a0 > 0, degree >= 1 and a squarefree f.
/// Precision doubles internally up to 16 times the request before giving up with std::runtime_error.
RootSet isolate_roots(std::span<const Integer> coeffs, mpfr_prec_t precision);

/// F(x, y) = sum a_i x^{d-i} y^i.
Integer eval_homogeneous(std::span<const Integer> coeffs, const Integer& x, const Integer& y);

struct KappaBound {
    std::size_t root;
    Interval kappa;                   // 2^{d-1} |k| / |f'(alpha)|
    std::optional<Interval> y_floor;  // |y| from which the inequality is guaranteed; none for d = 1
};

/// One entry per real root. Throws std::domain_error when f'(alpha) cannot be separated from zero.
std::vector<KappaBound> kappa_backward(const RootSet& roots, const Integer& k);
std::vector<KappaBound> kappa_backward(std::span<const Integer> coeffs, const Integer& k, mpfr_prec_t precision);

struct ApproxReport {
    std::size_t root;  // nearest root of f to x/y, real or not
    bool real_root = true;
    ComplexInterval alpha;
    Interval distance;  // |alpha - x/y|
    Interval bound;     // kappa / |y|^d
    Interval kappa;
    Decision holds = Decision::Undecided;
    std::optional<Interval> y_floor;
    Decision above_floor = Decision::Undecided;
    bool tie = false;  // another real root is equally close; the lower index was taken
    std::string banner;
    mpfr_prec_t precision = 0;
};

/// Requires F(x, y) = k exactly and y != 0; throws std::invalid_argument otherwise,
/// and std::domain_error when f has no real root.
ApproxReport verify_inequality(std::span<const Integer> coeffs, const Integer& k, const Integer& x,
                               const Integer& y, mpfr_prec_t precision);

struct ForwardReport {
    Integer value;  // |F(p, q)|
    std::size_t root;
    Interval bound;                         // a0 kappa prod_{sigma != id} (|alpha - sigma alpha| + 1)
    Decision within = Decision::Undecided;  // value <= bound
    Decision approximant = Decision::Undecided;  // |alpha - p/q| <= kappa / q^d
    mpfr_prec_t precision = 0;
};

/// Requires kappa > 0 and q^d >= kappa for the reduced fraction p/q.
ForwardReport forward_bound(std::span<const Integer> coeffs, const Rational& kappa, const Rational& pq,
                            mpfr_prec_t precision);

/// All (x, y) with max(|x|, |y|) <= height and F(x, y) = k, sorted.
std::vector<std::pair<Integer, Integer>> find_thue_solutions(std::span<const Integer> coeffs, const Integer& k,
                                                             long height);

/// Continued-fraction convergents shared by both endpoints of x, at most count of them.
std::vector<Rational> convergents(const Interval& x, std::size_t count);

/// Note attached to reports when d <= 2, where the finiteness statements can fail.
std::string degree_banner(std::size_t degree);

}  // namespace dioph
