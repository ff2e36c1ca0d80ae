#pragma once

// Arrangements of n+2 hyperplanes in P^n(Q): reduction to the standard arrangement
// X_0, ..., X_n, X_0 + ... + X_n, traces of linear subspaces on coordinate hyperplanes,
// and finite hyperplane covers of the S-integral points.

#include "dioph/linalg.hpp"
#include "dioph/projective.hpp"
#include "dioph/sarith.hpp"
#include "dioph/unitsolve.hpp"

#include <optional>
#include <vector>

namespace dioph {

class LinearFormSystem {
public:
    /// Throws std::invalid_argument unless there are n+2 forms in n+1 variables, n >= 1,
    /// no two of them proportional.
    explicit LinearFormSystem(std::vector<Hyperplane> forms);

    const std::vector<Hyperplane>& forms() const { return forms_; }
    std::size_t dimension() const { return forms_.front().size() - 1; }

private:
    std::vector<Hyperplane> forms_;
};

struct Reordering {
    std::size_t r;  // rank - 1
    /// forms()[permutation[i]] is L_i; L_0..L_r are independent.
    std::vector<std::size_t> permutation;
    /// L_{r+1} = a_0 L_0 + ... + a_m L_m with every a_i nonzero and m <= r as small as possible.
    std::vector<Rational> coefficients;

    std::size_t m() const { return coefficients.size() - 1; }
};

Reordering rank_and_reorder(const LinearFormSystem& sys);

struct SubspaceModel {
    QMatrix basis;  // rows span the linear subspace

    /// Throws std::invalid_argument on dependent or empty rows.
    explicit SubspaceModel(QMatrix rows);
    std::size_t s() const { return basis.rows() - 1; }  // projective dimension
    std::size_t ambient() const { return basis.cols() - 1; }
    bool contains(const ProjPoint& p) const;
};

struct TraceReport {
    std::size_t count;               // distinct nonempty L cap H_i
    std::vector<QMatrix> traces;     // reduced row echelon bases, one per distinct trace
    bool hypothesis = false;         // witness lies on L, has no zero coordinate and no vanishing subsum
    std::size_t required = 0;        // s + 2
};

/// L must lie in X_0 + ... + X_n = 0 and in no X_i = 0 (std::invalid_argument otherwise).
/// The witness, when given, is checked against the hypothesis with subsums of every size 1..n.
TraceReport distinct_traces(const SubspaceModel& l, const std::optional<ProjPoint>& witness = std::nullopt);

struct Covering {
    std::vector<ProjPoint> points;          // every S-integral point found in the box
    std::vector<ProjPoint> nondegenerate;   // points whose unit tuple has no vanishing proper subsum
    std::vector<ProjPoint> degenerate;
    std::vector<Hyperplane> subsum_hyperplanes;  // sum_{j in J} X_j = 0, 2 <= |J| <= n
    std::vector<Hyperplane> point_hyperplanes;   // x_1 X_0 - x_0 X_1 = 0 through each exceptional point
    std::vector<Hyperplane> hyperplanes() const;
};

/// Points (1 : u_1 : ... : u_n) of P^n minus the standard arrangement with u_i and 1 + sum u_i
/// S-units of exponents at most bound, together with a hyperplane cover; throws std::logic_error
/// if the cover misses a point. The dictionary with unit tuples is (1, u_1, ..., u_n, -(1 + sum u_i)).
Covering covering_hyperplanes(std::size_t n, const SContext& s, unsigned bound,
                              std::size_t cap = kDefaultEnumerationCap);

/// Unit tuple attached to a point of P^n minus the standard arrangement, and back.
std::vector<Rational> point_to_tuple(const ProjPoint& p);
ProjPoint tuple_to_point(const std::vector<Rational>& t);

bool verify_covering(const std::vector<ProjPoint>& points, const std::vector<Hyperplane>& hyperplanes);

struct ArrangementCover {
    Reordering reordering;
    SContext extended;                 // S with the primes of the a_i
    std::vector<ClassRep> classes;     // non-degenerate solutions of Y_0 + ... + Y_{m+1} = 0
    std::vector<Hyperplane> hyperplanes;
};

/// Cover for an arbitrary arrangement: with Y_i = a_i L_i (i <= m) and Y_{m+1} = -L_{r+1}, an
/// S-integral point gives S'-units Y_i(P) summing to zero. Each non-degenerate class e (exponents
/// at most bound) contributes e_1 Y_0 - Y_1 = 0, each vanishing subsum sum_{i in I} Y_i = 0.
ArrangementCover cover_arrangement(const LinearFormSystem& sys, const SContext& s, unsigned bound,
                                   std::size_t cap = kDefaultEnumerationCap);

/// S-integral points of the complement with integer coordinates in [-height, height].
std::vector<ProjPoint> s_integral_points(const std::vector<Hyperplane>& arrangement, const SContext& s, long height,
                                         std::size_t cap = kDefaultEnumerationCap);

/// (e_0 : ... : e_k : eta_1 : ... : eta_r) and the arrangement X_0, ..., X_{k+r}, X_0 + ... + X_k
/// it avoids when the first block is S-integral for the standard arrangement of P^k.
ProjPoint pad_point(const ProjPoint& p, const std::vector<Rational>& etas);
std::vector<Hyperplane> padded_arrangement(std::size_t k, std::size_t r);

}  // namespace dioph
