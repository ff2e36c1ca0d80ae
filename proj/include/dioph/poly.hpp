#pragma once

// Univariate polynomials over Q, coefficients stored lowest degree first.

#include "dioph/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dioph {

class Poly {
public:
    Poly() = default;
    /// coeffs[i] multiplies X^i.
    explicit Poly(std::vector<Rational> coeffs);
    /// Highest degree first, the usual way polynomials are written: (a0, ..., ad).
    static Poly from_descending(const std::vector<Rational>& coeffs);
    static Poly monomial(const Rational& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    std::vector<Rational> descending() const;

    Rational operator()(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Euclidean division; throws std::domain_error on a zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    bool has_integer_coefficients() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

bool is_squarefree(const Poly& f);

/// Yun's decomposition f = c * prod g_i^i with squarefree, pairwise coprime monic g_i.
/// Entries are (g_i, i) for the nonconstant factors.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Resultant via the Sylvester determinant.
Rational resultant(const Poly& f, const Poly& g);

/// Discriminant (-1)^{d(d-1)/2} Res(f, f') / lc(f).
Rational discriminant(const Poly& f);

/// Rational roots of f (exactly), increasing.
std::vector<Rational> rational_roots(const Poly& f);

/// Irreducibility over Q when it can be certified cheaply: true via a factorization-free
/// irreducibility test modulo small primes, false when a rational root or a repeated
/// factor exists; nullopt when neither applies.
std::optional<bool> irreducible_over_q(const Poly& f);

}  // namespace dioph
