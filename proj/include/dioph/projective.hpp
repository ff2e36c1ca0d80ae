#pragma once

// Points and hyperplanes of P^n(Q), reduction modulo primes, and
// S-integrality on complements of hyperplane arrangements.

#include "dioph/linalg.hpp"
#include "dioph/rational.hpp"
#include "dioph/sarith.hpp"

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph {

using IVector = std::vector<Integer>;

/// Primitive integer vector with first nonzero entry positive.
/// Used for both points and hyperplane coefficient vectors.
class ProjPoint {
public:
    ProjPoint() = default;
    /// Canonicalizes; throws std::invalid_argument("not a projective point") on all zeros.
    explicit ProjPoint(std::span<const Rational> raw);
    explicit ProjPoint(const IVector& raw);
    ProjPoint(std::initializer_list<long> raw);

    const IVector& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    std::size_t dimension() const { return coords_.size() - 1; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    QVector rationals() const { return {coords_.begin(), coords_.end()}; }

    std::string to_string() const;  // "(1:-2:3)"

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

private:
    IVector coords_;
};

using Hyperplane = ProjPoint;

/// Canonical representative of the class of raw (clears denominators, divides by the gcd, fixes sign).
ProjPoint normalize(std::span<const Rational> raw);

/// Integer value of the normalized linear form at the normalized point.
Integer evaluate(const Hyperplane& h, const ProjPoint& p);

struct ResiduePoint {
    Integer modulus;
    IVector coords;  // residues in [0, modulus), first nonzero equal to 1

    friend bool operator==(const ResiduePoint&, const ResiduePoint&) = default;
};

/// Reduction of P in P^n(F_p): scale by a coordinate of maximal p-adic absolute value and reduce.
ResiduePoint reduce_mod_p(const ProjPoint& p, const Integer& prime);

/// True when the reduction of p modulo prime satisfies the reduced equation of h.
bool reduction_meets(const ProjPoint& p, const Hyperplane& h, const Integer& prime);

class PointOnDivisor : public std::domain_error {
public:
    PointOnDivisor() : std::domain_error("point on removed divisor") {}
};

/// Global test: every normalized H(P) is an S-unit. Throws PointOnDivisor when some H(P) = 0.
bool is_s_integral(const ProjPoint& p, std::span<const Hyperplane> arrangement, const SContext& s);

/// Local test over the primes up to prime_bound outside S: the reduction of P avoids every
/// reduced hyperplane. Agrees with is_s_integral whenever prime_bound >= max |H(P)|.
bool is_s_integral_local(const ProjPoint& p, std::span<const Hyperplane> arrangement, const SContext& s,
                         unsigned long prime_bound);

struct CoordinateChange {
    ProjPoint point;
    SContext delta;  // primes of det(M) and of the denominators of M's entries
};

/// normalize(M * P) with the primes under which S-integrality is transported.
/// Throws std::domain_error for singular M.
CoordinateChange change_coordinates(const ProjPoint& p, const QMatrix& m);

/// Equation of the image hyperplane under P -> M P, i.e. normalize(a * M^{-1}).
Hyperplane transform_hyperplane(const Hyperplane& h, const QMatrix& m);

/// Primes of det(M) and of the entries' denominators.
SContext coordinate_delta(const QMatrix& m);

/// Segre map P^1 x P^1 -> P^3, (X0:X1),(Y0:Y1) -> (X0Y0 : X1Y0 : X0Y1 : X1Y1).
ProjPoint quadratic_embed(const ProjPoint& a, const ProjPoint& b);

/// Projection from (0:...:0:1): drops the last coordinate.
ProjPoint project_from_last(const ProjPoint& p);

/// The hyperplanes X_0 = 0, ..., X_n = 0 and X_0 + ... + X_n = 0 of P^n.
std::vector<Hyperplane> standard_arrangement(std::size_t n);

}  // namespace dioph
