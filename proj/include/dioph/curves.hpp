#pragma once

// Bounded searches for integer points on the classical families
//   y^2 = x^3 + k, y^2 = f(x), y^m = f(x), (x - a_1 y)...(x - a_n y) = k,
// and for the two-term unit equation a_1 E_1 + a_2 E_2 = 1.

#include "dioph/rational.hpp"
#include "dioph/sarith.hpp"

#include <string>
#include <vector>

namespace dioph {

enum class Family { Mordell, Elliptic, Hyperelliptic, Superelliptic, ThueClassic, SiegelUnits };

std::string to_string(Family f);
/// Accepts the names printed by to_string; throws std::invalid_argument otherwise.
Family parse_family(const std::string& name);

struct CurveSpec {
    Family family = Family::Mordell;
    Integer k = 1;                 // Mordell
    std::vector<Integer> f;        // Elliptic, Hyperelliptic, Superelliptic: highest degree first
    unsigned m = 2;                // Superelliptic exponent
    std::vector<Rational> roots;   // ThueClassic
    Rational thue_k = 1;           // ThueClassic
    Rational a1 = 1, a2 = 1;       // SiegelUnits
    SContext s;                    // SiegelUnits

    static CurveSpec mordell(Integer k);
    static CurveSpec elliptic(std::vector<Integer> f);
    static CurveSpec hyperelliptic(std::vector<Integer> f);
    static CurveSpec superelliptic(std::vector<Integer> f, unsigned m);
    static CurveSpec thue(std::vector<Rational> roots, Rational k);
    static CurveSpec siegel(Rational a1, Rational a2, SContext s);

    /// Throws std::invalid_argument describing the first violated family condition.
    void validate() const;
};

/// (x, y) for the curve families, (E_1, E_2) for SiegelUnits; ordered lexicographically.
using CurvePoint = std::pair<Rational, Rational>;

/// Exhaustive search: |x| <= box (and |y| <= box for ThueClassic), or exponents at most box for
/// SiegelUnits. Validates the spec first. Throws CapExceeded past cap candidates.
std::vector<CurvePoint> enumerate_points(const CurveSpec& spec, long box, std::size_t cap = kDefaultEnumerationCap);

/// Whether the pair satisfies the spec's equation exactly.
bool on_curve(const CurveSpec& spec, const CurvePoint& p);

}  // namespace dioph
