#pragma once

// Thue-Mahler equations F(X,Y) = k E over Q where F has three rational
// linear factors, F = (X - a1 Y)(X - a2 Y)(X - a3 Y) H(X,Y), together with the
// maps that carry solutions between Thue-Mahler equations, the form XY(X-Y),
// the unit equation e1 + e2 = 1 and integral points of P^1 minus {0, 1, oo}.

#include "dioph/linalg.hpp"
#include "dioph/projective.hpp"
#include "dioph/rational.hpp"
#include "dioph/sarith.hpp"

#include <array>
#include <optional>
#include <vector>

namespace dioph {

enum class FormKind {
    Split,      // three finite rational roots times a cofactor
    XYXminusY,  // XY(X-Y): one of its roots sits at infinity
};

class BinaryFormSpec {
public:
    /// Throws std::invalid_argument on duplicate roots, zero k or zero cofactor.
    static BinaryFormSpec split(std::array<Rational, 3> roots, std::vector<Rational> cofactor = {Rational(1)},
                                Rational k = 1);
    static BinaryFormSpec xy_x_minus_y(Rational k = 1);

    FormKind kind() const { return kind_; }
    const std::array<Rational, 3>& roots() const { return roots_; }
    /// Coefficients of H(X,Y) = sum_i h_i X^{e-i} Y^i, highest power of X first.
    const std::vector<Rational>& cofactor() const { return cofactor_; }
    const Rational& k() const { return k_; }
    int degree() const { return 3 + static_cast<int>(cofactor_.size()) - 1; }

    Rational cofactor_at(const Rational& x, const Rational& y) const;
    /// Least positive integer d with d*H integral.
    Integer cofactor_denominator() const;

    friend bool operator==(const BinaryFormSpec&, const BinaryFormSpec&) = default;

private:
    FormKind kind_ = FormKind::Split;
    std::array<Rational, 3> roots_{};
    std::vector<Rational> cofactor_{Rational(1)};
    Rational k_{1};
};

Rational eval_form(const BinaryFormSpec& f, const Rational& x, const Rational& y);

struct TMSolution {
    Rational x;
    Rational y;
    Rational eps;
    ProjPoint point;  // normalize(x, y), the class

    friend bool operator==(const TMSolution&, const TMSolution&) = default;
};

/// The solution of the class of (x:y), when one exists: S-integers (eta x, eta y)
/// with F(eta x, eta y) = k * S-unit. Prefers eta = 1 for coprime integers.
std::optional<TMSolution> class_solution(const BinaryFormSpec& f, const SContext& s, const ProjPoint& point);

/// One solution per class among coprime (x, y) with max(|x|,|y|) <= height, ordered by point.
std::vector<TMSolution> solve_thue_mahler(const BinaryFormSpec& f, const SContext& s, unsigned long height,
                                          std::size_t cap = kDefaultEnumerationCap);

/// True iff both solutions define the same point; then checks eta = x'/x (or y'/y) is an S-unit
/// with eps' = eta^m eps and throws std::logic_error otherwise.
bool classes_equivalent(const TMSolution& a, const TMSolution& b, int degree, const SContext& s);

enum class ShearDirection {
    IToII,  // X' = X - Y, Y' = X + Y: X'(X'-Y')(X'+Y') instances onto XY(X-Y)
    IIToI,  // X' = (a2-a3)(X - a1 Y), Y' = (a1-a3)(X - a2 Y): general split forms onto XY(X-Y)
};

struct ShearResult {
    BinaryFormSpec target;
    QMatrix matrix;                   // target coordinates = matrix * source coordinates
    std::vector<TMSolution> solutions;  // transported, each verified on target
    SContext delta;                   // primes to add to S
};

/// Carries an instance and its solutions to the form XY(X-Y).
/// IToII expects the roots {0, 1, -1} with constant cofactor; IIToI accepts any split form and
/// is the identity on an XY(X-Y) source. Throws std::invalid_argument on a wrong-shaped source.
ShearResult shear_transform(const BinaryFormSpec& f, ShearDirection direction, const std::vector<TMSolution>& sols,
                            const SContext& s);

/// (a1 - a2) b3 + (a2 - a3) b1 + (a3 - a1) b2 with b_i = x - a_i y; identically zero.
Rational siegel_residue(const std::array<Rational, 3>& roots, const Rational& x, const Rational& y);

/// S extended by the primes of k, d, a_i, a_i - a_j and the coefficients of dH:
/// the context in which the transports below are stated.
SContext transport_context(const BinaryFormSpec& f, const SContext& s);

/// Rebuilds (x0 eta, y0 eta, eps0 eta^n) from gamma = b2/b1 and eta = b1.
/// Throws std::domain_error("gamma yields root of F") when F(x0, y0) = 0.
TMSolution transport_unit_to_thue(const BinaryFormSpec& f, const Rational& gamma, const Rational& eta);

struct UnitImage {
    std::array<Rational, 3> beta;
    Rational gamma;  // beta2 / beta1
};

/// b_i = x - a_i y. Throws std::domain_error("x = a1 y") when b1 = 0; checks that each
/// (a_i - a_j) b_k is a unit for transport_context(f, s) and throws std::logic_error otherwise.
UnitImage transport_thue_to_unit(const BinaryFormSpec& f, const TMSolution& sol, const SContext& s);

/// The hyperplanes X = 0, Y = 0, X - Y = 0 of P^1, i.e. the points 0, oo and 1.
std::vector<Hyperplane> zero_one_infinity();

/// (e1, e2) with e1 + e2 = 1 -> (e1 : 1).
ProjPoint unit_to_point(const Rational& e1, const Rational& e2, const SContext& s);
/// S-integral (x : y) on P^1 minus {0, 1, oo} -> u = x/y (u and 1-u are S-units).
Rational point_to_unit(const ProjPoint& p, const SContext& s);

}  // namespace dioph
