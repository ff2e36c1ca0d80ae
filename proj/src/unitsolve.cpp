#include "dioph/unitsolve.hpp"

#include "dioph/detail/odometer.hpp"

#include <algorithm>
#include <stdexcept>

namespace dioph {

UnitTuple::UnitTuple(std::vector<Rational> entries, SContext context)
    : entries_(std::move(entries)), context_(std::move(context)) {
    if (entries_.size() < 2) throw std::invalid_argument("unit tuple needs at least two entries");
    Rational sum;
    for (const auto& e : entries_) {
        if (!is_s_unit(e, context_))
            throw std::invalid_argument("entry " + e.to_string() + " is not an S-unit for S=" + context_.to_string());
        sum += e;
    }
    if (!sum.is_zero()) throw std::invalid_argument("unit tuple entries do not sum to zero");
}

namespace {

UnitTuple normalized(const UnitTuple& t) {
    const Rational inv = t.entries().front().inverse();
    std::vector<Rational> e;
    e.reserve(t.size());
    for (const auto& x : t.entries()) e.push_back(x * inv);
    return UnitTuple(std::move(e), t.context());
}

}  // namespace

ClassRep::ClassRep(const UnitTuple& t) : tuple_(normalized(t)) {}

std::vector<std::vector<std::size_t>> vanishing_subsums(const std::vector<Rational>& t, std::size_t min_size) {
    const std::size_t len = t.size();
    if (len < 2) throw std::invalid_argument("vanishing_subsums needs at least two entries");
    if (len > 24) throw std::invalid_argument("vanishing_subsums limited to 24 entries");
    std::vector<std::vector<std::size_t>> out;
    const std::uint32_t full = (1u << len) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size < min_size || size > len - 1) continue;
        Rational s;
        for (std::size_t i = 0; i < len; ++i)
            if (mask & (1u << i)) s += t[i];
        if (!s.is_zero()) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < len; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        out.push_back(std::move(idx));
    }
    return out;
}

bool is_nondegenerate(const std::vector<Rational>& t, std::size_t min_size) {
    return vanishing_subsums(t, min_size).empty();
}

bool is_valid_solution(const std::vector<Rational>& t, const SContext& s) {
    if (t.size() < 2) return false;
    Rational sum;
    for (const auto& e : t) {
        if (!is_s_unit(e, s)) return false;
        sum += e;
    }
    return sum.is_zero() && is_nondegenerate(t);
}

namespace {

// Visits every normalized tuple (1, e_1, ..., e_{n+1}) in the exponent box.
template <typename Visit>
void scan_box(std::size_t n, const SContext& s, unsigned bound, std::size_t cap, Visit&& visit,
              const std::size_t& found) {
    if (n < 1) throw std::invalid_argument("unit equation dimension must be >= 1");
    const std::vector<Rational> units = enumerate_s_units(s, bound, cap);
    std::vector<long> idx(n, 0);
    const long last = static_cast<long>(units.size()) - 1;
    std::size_t scanned = 0;
    std::vector<Rational> tuple(n + 2);
    tuple[0] = 1;
    do {
        if (++scanned > cap) throw CapExceeded(cap, found);
        Rational sum = 1;
        for (std::size_t i = 0; i < n; ++i) {
            tuple[i + 1] = units[static_cast<std::size_t>(idx[i])];
            sum += tuple[i + 1];
        }
        tuple[n + 1] = -sum;
        if (!in_unit_box(tuple[n + 1], s, bound)) continue;
        visit(tuple);
    } while (detail::advance(idx, 0, last));
}

}  // namespace

std::vector<ClassRep> solve_unit_equation(std::size_t n, const SContext& s, unsigned bound, std::size_t cap) {
    std::vector<ClassRep> out;
    std::size_t found = 0;
    scan_box(
        n, s, bound, cap,
        [&](const std::vector<Rational>& t) {
            if (!is_nondegenerate(t)) return;
            out.emplace_back(UnitTuple(t, s));
            ++found;
        },
        found);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Rational>> degenerate_unit_solutions(std::size_t n, const SContext& s, unsigned bound,
                                                             std::size_t cap) {
    std::vector<std::vector<Rational>> out;
    std::size_t found = 0;
    scan_box(
        n, s, bound, cap,
        [&](const std::vector<Rational>& t) {
            if (is_nondegenerate(t)) return;
            out.push_back(t);
            ++found;
        },
        found);
    std::sort(out.begin(), out.end());
    return out;
}

ClassRep rescaled_class(const UnitTuple& t, const Rational& eta) {
    std::vector<Rational> e;
    e.reserve(t.size());
    for (const auto& x : t.entries()) e.push_back(x * eta);
    return ClassRep(UnitTuple(std::move(e), t.context()));
}

std::string gamma_defect(const Rational& gamma, std::size_t t, const SContext& s) {
    if (t < 1) return "t must be at least 1";
    if (gamma.is_zero()) return "gamma must be nonzero";
    const Membership m = s_membership(gamma, s);
    if (m == Membership::NotSInteger) return "gamma is not an S-integer";
    if (m == Membership::SUnit) return "gamma is an S-unit";
    for (std::size_t r = 1; r <= t; ++r)
        if (is_s_integer(Rational(static_cast<long>(r)) / gamma, s))
            return std::to_string(r) + "/gamma is an S-integer";
    return "";
}

Lift lift_gamma(const ClassRep& base, const Rational& gamma, std::size_t t, const SContext& s) {
    if (const std::string why = gamma_defect(gamma, t, s); !why.empty())
        throw std::invalid_argument("invalid gamma: " + why);
    const auto& e = base.entries();
    if (!is_nondegenerate(e, 1)) throw std::invalid_argument("base solution is degenerate");
    const Rational shifted = gamma - Rational(static_cast<long>(t));
    SContext extended = extend_s(s, {gamma * shifted});
    std::vector<Rational> out;
    out.reserve(e.size() + t);
    for (std::size_t i = 0; i + 1 < e.size(); ++i) out.push_back(gamma * e[i]);
    out.push_back(shifted * e.back());
    for (std::size_t i = 0; i < t; ++i) out.push_back(e.back());
    UnitTuple lifted(std::move(out), extended);
    if (!is_nondegenerate(lifted.entries(), 1))
        throw std::logic_error("lifted tuple has a vanishing proper subsum");
    return {std::move(lifted), std::move(extended)};
}

Integer binomial(unsigned m, unsigned j) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), m, j);
    return r;
}

std::vector<Rational> binomial_terms(const Rational& eps, unsigned m) {
    std::vector<Rational> terms;
    terms.reserve(m + 2);
    terms.push_back((Rational(1) - eps).pow(m));
    for (unsigned j = 1; j <= m; ++j) {
        // -(-1)^j C(m,j) e^j moved to the left-hand side
        const Rational term = Rational(binomial(m, j)) * eps.pow(j);
        terms.push_back(j % 2 == 1 ? term : -term);
    }
    terms.emplace_back(-1);
    return terms;
}

BinomialLift lift_binomial(const Rational& eps, unsigned m, const SContext& s) {
    if (m == 0) throw std::invalid_argument("lift_binomial needs m >= 1");
    if (!is_s_unit(eps, s) || !is_s_unit(Rational(1) - eps, s))
        throw std::invalid_argument("lift_binomial needs e and 1-e to be S-units");
    std::vector<Rational> coeffs;
    for (unsigned j = 1; j + 1 <= m; ++j) coeffs.emplace_back(binomial(m, j));
    SContext extended = extend_s(s, coeffs);
    std::vector<Rational> terms = binomial_terms(eps, m);
    const bool degenerate = !is_nondegenerate(terms);
    return {UnitTuple(std::move(terms), std::move(extended)), degenerate};
}

}  // namespace dioph
