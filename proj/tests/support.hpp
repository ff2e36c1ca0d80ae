#pragma once

#include "dioph/rational.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using dioph::Integer;
using dioph::Rational;

inline Rational Q(const std::string& s) { return Rational::parse(s); }

inline std::vector<Rational> Qs(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) out.push_back(Rational::parse(s));
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Rational random_nonzero(std::mt19937_64& rng, long bound) {
    Rational r;
    do r = random_rational(rng, bound);
    while (r.is_zero());
    return r;
}

// +-prod p^e with e in [-bound, bound]
inline Rational random_unit(std::mt19937_64& rng, const std::vector<long>& primes, int bound) {
    std::uniform_int_distribution<int> e(-bound, bound), sign(0, 1);
    Rational u = sign(rng) ? 1 : -1;
    for (long p : primes) u *= Rational(p).pow(e(rng));
    return u;
}

}  // namespace testing
