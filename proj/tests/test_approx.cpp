#include "dioph/approx.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace dioph;
using testing::Q;

namespace {

IntCoeffs C(std::initializer_list<long> c) {
    IntCoeffs out;
    for (long v : c) out.emplace_back(v);
    return out;
}

bool encloses(const Interval& x, double v, double tol = 1e-12) {
    return x.lo().to_double() <= v + tol && x.hi().to_double() >= v - tol && x.hi().to_double() - x.lo().to_double() < 1e-9;
}

double width(const Interval& x) {
    Real w(256);
    mpfr_sub(w.get(), x.hi().get(), x.lo().get(), MPFR_RNDU);
    return w.to_double();
}

}  // namespace

TEST_CASE("root isolation examples") {
    const auto cube = isolate_roots(C({1, 0, 0, -2}), 64);
    REQUIRE(cube.roots.size() == 3);
    REQUIRE(cube.real_indices().size() == 1);
    const auto& r = cube.roots[cube.real_indices()[0]];
    CHECK(encloses(r.value.re, std::cbrt(2.0)));
    CHECK(r.conjugate == cube.real_indices()[0]);
    int complex = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (!cube.roots[i].real) {
            ++complex;
            CHECK(cube.roots[cube.roots[i].conjugate].conjugate == i);
            CHECK(encloses(cube.roots[i].value.re, -std::cbrt(2.0) / 2));
        }
    CHECK(complex == 2);

    const auto pm1 = isolate_roots(C({1, 0, -1}), 64);
    REQUIRE(pm1.roots.size() == 2);
    CHECK(pm1.roots[0].exact == std::optional<Rational>(-1));
    CHECK(pm1.roots[1].exact == std::optional<Rational>(1));

    const auto i = isolate_roots(C({1, 0, 1}), 32);
    REQUIRE(i.roots.size() == 2);
    CHECK(i.real_indices().empty());
    CHECK(encloses(i.roots[0].value.re, 0.0));
    CHECK(encloses(i.roots[0].value.im, -1.0));
    CHECK(encloses(i.roots[1].value.im, 1.0));

    CHECK_THROWS(isolate_roots(C({1, -2, 1}), 64));
}

TEST_CASE("enclosures shrink with precision") {
    const IntCoeffs f = C({1, 0, -3, 1});
    double previous = 1.0;
    for (mpfr_prec_t p : {32, 64, 128, 256}) {
        const auto roots = isolate_roots(f, p);
        REQUIRE(roots.real_indices().size() == 3);
        double w = 0;
        for (auto idx : roots.real_indices()) w = std::max(w, width(roots.roots[idx].value.re));
        CHECK(w <= previous);
        previous = w;
    }
    CHECK(previous < 1e-60);
}

TEST_CASE("kappa examples") {
    const double alpha = std::cbrt(2.0);
    const double kappa = 4.0 / (3.0 * alpha * alpha);
    const auto one = kappa_backward(C({1, 0, 0, -2}), Integer(1), 64);
    REQUIRE(one.size() == 1);
    CHECK(encloses(one[0].kappa, kappa));
    CHECK(std::abs(kappa - 0.8399) < 1e-4);
    const auto two = kappa_backward(C({1, 0, 0, -2}), Integer(2), 64);
    CHECK(encloses(two[0].kappa, 2 * kappa));
    const auto quad = kappa_backward(C({1, 0, -2}), Integer(1), 64);
    REQUIRE(quad.size() == 2);
    for (const auto& b : quad) CHECK(encloses(b.kappa, 1 / std::sqrt(2.0)));
}

TEST_CASE("verify_inequality examples") {
    const auto a = verify_inequality(C({1, 0, 0, -2}), Integer(1), Integer(-1), Integer(-1), 64);
    CHECK(a.real_root);
    CHECK(encloses(a.distance, std::cbrt(2.0) - 1));
    CHECK(a.holds == Decision::True);
    CHECK(a.banner.empty());
    CHECK_THROWS_AS(verify_inequality(C({1, 0, 0, -2}), Integer(1), Integer(1), Integer(0), 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_inequality(C({1, 0, 0, -2}), Integer(1), Integer(2), Integer(1), 64),
                    std::invalid_argument);

    const auto b = verify_inequality(C({1, 0, -2}), Integer(-1), Integer(1), Integer(1), 64);
    CHECK(encloses(b.distance, std::sqrt(2.0) - 1));
    CHECK(encloses(b.bound, 1 / std::sqrt(2.0)));
    CHECK(b.holds == Decision::True);
    CHECK_FALSE(b.banner.empty());
}

TEST_CASE("a root above the floor always satisfies the inequality") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> c(-6, 6), xy(-40, 40);
    int decided = 0;
    for (int t = 0; t < 200; ++t) {
        IntCoeffs f = C({1 + std::abs(c(rng)), c(rng), c(rng), c(rng)});
        if (f.back() == 0) f.back() = 1;
        Poly p = Poly::from_descending({Rational(f[0]), Rational(f[1]), Rational(f[2]), Rational(f[3])});
        if (!is_squarefree(p)) continue;
        const Integer x = xy(rng), y = 1 + std::abs(xy(rng));
        const Integer k = eval_homogeneous(f, x, y);
        if (k == 0) continue;
        const auto r = verify_inequality(f, k, x, y, 96);
        if (r.above_floor == Decision::True) {
            ++decided;
            CHECK(r.holds == Decision::True);
        }
    }
    CHECK(decided > 0);
}

TEST_CASE("forward bound examples") {
    const auto a = forward_bound(C({1, 0, 0, -2}), Q("21/25"), Q("5/4"), 64);
    CHECK(a.value == 3);
    CHECK(a.within == Decision::True);
    const auto b = forward_bound(C({1, 0, 0, -2}), Q("21/25"), Rational(1), 64);
    CHECK(b.value == 1);
    CHECK(b.within == Decision::True);
    const auto c = forward_bound(C({1, 0, -2}), Rational(1), Q("3/2"), 64);
    CHECK(c.value == 1);
    CHECK_THROWS_AS(forward_bound(C({1, 0, 0, -2}), Rational(0), Q("5/4"), 64), std::invalid_argument);
}

TEST_CASE("thue solutions and convergents") {
    const auto sols = find_thue_solutions(C({1, 0, 0, -2}), Integer(1), 1000);
    using P = std::pair<Integer, Integer>;
    CHECK(sols == std::vector<P>{{-1, -1}, {1, 0}});
    std::vector<P> brute;
    for (long x = -60; x <= 60; ++x)
        for (long y = -60; y <= 60; ++y)
            if (x * x * x - 2 * y * y * y == -7) brute.emplace_back(x, y);
    CHECK(find_thue_solutions(C({1, 0, 0, -2}), Integer(-7), 60) == brute);

    const auto sqrt2 = isolate_roots(C({1, 0, -2}), 64).roots[1].value.re;
    const auto cf = convergents(sqrt2, 5);
    REQUIRE(cf.size() == 5);
    CHECK(cf[0] == 1);
    CHECK(cf[1] == Q("3/2"));
    CHECK(cf[2] == Q("7/5"));
    CHECK(cf[3] == Q("17/12"));
    CHECK(cf[4] == Q("41/29"));
}

TEST_CASE("degree banner") {
    CHECK_FALSE(degree_banner(1).empty());
    CHECK_FALSE(degree_banner(2).empty());
    CHECK(degree_banner(3).empty());
}
