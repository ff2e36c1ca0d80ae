#include "dioph/thuemahler.hpp"
#include "dioph/unitsolve.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace dioph;
using testing::Q;

namespace {

const BinaryFormSpec kCubic = BinaryFormSpec::split({Rational(0), Rational(1), Rational(-1)});

TMSolution sol(long x, long y, long eps) { return {x, y, eps, ProjPoint{x, y}}; }

bool unit_over(const Rational& v, const SContext& s) { return !v.is_zero() && is_s_unit(v, s); }

// coprime (x, y) up to height with F(x, y)/k an S-unit, one per projective class
std::set<ProjPoint> brute_classes(const BinaryFormSpec& f, const SContext& s, long h) {
    std::set<ProjPoint> out;
    for (long x = -h; x <= h; ++x)
        for (long y = -h; y <= h; ++y) {
            if (std::gcd(x, y) != 1) continue;
            Rational v;
            if (f.kind() == FormKind::XYXminusY)
                v = Rational(x * y * (x - y));
            else {
                v = f.cofactor_at(x, y);
                for (const auto& a : f.roots()) v *= Rational(x) - a * Rational(y);
            }
            if (unit_over(v / f.k(), s)) out.insert(ProjPoint{x, y});
        }
    return out;
}

std::set<ProjPoint> points(const std::vector<TMSolution>& sols) {
    std::set<ProjPoint> out;
    for (const auto& t : sols) out.insert(t.point);
    return out;
}

}  // namespace

TEST_CASE("eval_form examples") {
    CHECK(eval_form(kCubic, 2, 1) == 6);
    CHECK(eval_form(BinaryFormSpec::xy_x_minus_y(), 2, 1) == 2);
    CHECK(eval_form(kCubic, 1, 0) == 1);
    const auto quartic = BinaryFormSpec::split({Rational(1), Rational(2), Rational(3)}, {Rational(1), Rational(1)});
    CHECK(quartic.degree() == 4);
    CHECK(eval_form(quartic, 0, 1) == -6);  // (-1)(-2)(-3) * 1
}

TEST_CASE("form validation") {
    CHECK_THROWS_AS(BinaryFormSpec::split({Rational(0), Rational(0), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryFormSpec::split({Rational(0), Rational(1), Rational(2)}, {Rational(1)}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(BinaryFormSpec::split({Rational(0), Rational(1), Rational(2)}, {Rational(0)}),
                    std::invalid_argument);
    CHECK(BinaryFormSpec::split({Rational(0), Rational(1), Rational(2)}, {Q("1/2"), Q("1/3")})
              .cofactor_denominator() == 6);
}

TEST_CASE("solve_thue_mahler examples") {
    const auto xy = points(solve_thue_mahler(BinaryFormSpec::xy_x_minus_y(), SContext{2, 3}, 10));
    for (const ProjPoint& p : {ProjPoint{2, 1}, ProjPoint{3, 1}, ProjPoint{1, -1}, ProjPoint{3, 2}, ProjPoint{4, 1},
                               ProjPoint{9, 8}})
        CHECK(xy.count(p) == 1);
    const auto cubic = solve_thue_mahler(kCubic, SContext{2, 3}, 5);
    const auto it = std::find_if(cubic.begin(), cubic.end(), [](const TMSolution& t) { return t.point == ProjPoint{2, 1}; });
    REQUIRE(it != cubic.end());
    CHECK(it->eps == 6);
    CHECK(std::count(cubic.begin(), cubic.end(), sol(1, 0, 1)) == 1);
    const auto k5 = BinaryFormSpec::split({Rational(0), Rational(1), Rational(-1)}, {Rational(1)}, 5);
    CHECK(points(solve_thue_mahler(k5, SContext{2, 3}, 5)) == brute_classes(k5, SContext{2, 3}, 5));
}

TEST_CASE("solve_thue_mahler agrees with a brute-force scan") {
    const SContext s{2, 3};
    CHECK(points(solve_thue_mahler(BinaryFormSpec::xy_x_minus_y(), s, 30)) ==
          brute_classes(BinaryFormSpec::xy_x_minus_y(), s, 30));
    CHECK(points(solve_thue_mahler(kCubic, s, 30)) == brute_classes(kCubic, s, 30));
    const auto odd = BinaryFormSpec::split({Q("1/2"), Rational(3), Rational(-5)}, {Rational(1)}, 7);
    CHECK(points(solve_thue_mahler(odd, SContext{2, 3, 5}, 25)) == brute_classes(odd, SContext{2, 3, 5}, 25));
    for (const auto& t : solve_thue_mahler(kCubic, s, 30)) {
        CHECK(eval_form(kCubic, t.x, t.y) == kCubic.k() * t.eps);
        CHECK(is_s_unit(t.eps, s));
    }
}

TEST_CASE("classes_equivalent examples") {
    const SContext s{2, 3};
    CHECK(classes_equivalent(sol(2, 1, 6), sol(4, 2, 48), 3, s));
    CHECK_FALSE(classes_equivalent(sol(2, 1, 6), sol(3, 1, 24), 3, s));
    CHECK(classes_equivalent(sol(2, 1, 6), sol(2, 1, 6), 3, s));
    CHECK_THROWS_AS(classes_equivalent(sol(2, 1, 6), sol(4, 2, 47), 3, s), std::logic_error);
}

TEST_CASE("shear i to ii") {
    const SContext s{2, 3};
    const auto r = shear_transform(kCubic, ShearDirection::IToII, {sol(2, 1, 6)}, s);
    CHECK(r.target.kind() == FormKind::XYXminusY);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].point == ProjPoint{3, -1});
    CHECK(eval_form(r.target, r.solutions[0].x, r.solutions[0].y) == r.solutions[0].eps);
    CHECK(r.delta.primes() == std::vector<Integer>{2});
    CHECK_THROWS_AS(shear_transform(BinaryFormSpec::split({Rational(0), Rational(1), Rational(2)}),
                                    ShearDirection::IToII, {}, s),
                    std::invalid_argument);
}

TEST_CASE("shear ii to i") {
    const SContext s{2, 3};
    const auto r = shear_transform(kCubic, ShearDirection::IIToI, solve_thue_mahler(kCubic, s, 20), s);
    CHECK(r.matrix == QMatrix(std::vector<QVector>{{2, 0}, {1, -1}}));
    CHECK(r.matrix.determinant() == -2);
    CHECK(r.delta.primes() == std::vector<Integer>{2});
    const SContext s2 = s.united(r.delta);
    for (const auto& t : r.solutions) {
        CHECK(eval_form(r.target, t.x, t.y) == t.eps);
        CHECK(is_s_unit(t.eps, s2));
    }
    const auto same = shear_transform(BinaryFormSpec::xy_x_minus_y(), ShearDirection::IIToI, {sol(2, 1, 2)}, s);
    CHECK(same.delta.empty());
    CHECK(same.solutions == std::vector<TMSolution>{sol(2, 1, 2)});
}

TEST_CASE("siegel residue vanishes") {
    CHECK(siegel_residue({Rational(0), Rational(1), Rational(-1)}, 2, 1) == 0);
    CHECK(siegel_residue({Rational(4), Rational(9), Rational(-2)}, 0, 0) == 0);
    CHECK(siegel_residue({Q("1/2"), Rational(3), Rational(-5)}, 7, 2) == 0);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        std::array<Rational, 3> a{testing::random_rational(rng, 1'000'000), testing::random_rational(rng, 1'000'000),
                                  testing::random_rational(rng, 1'000'000)};
        CHECK(siegel_residue(a, testing::random_rational(rng, 1'000'000), testing::random_rational(rng, 1'000'000)) ==
              0);
    }
}

TEST_CASE("transport examples") {
    const SContext s{2, 3};
    CHECK(transport_unit_to_thue(kCubic, Q("1/2"), 2) == sol(2, 1, 6));
    CHECK(transport_unit_to_thue(kCubic, 1, 1) == sol(1, 0, 1));
    CHECK(transport_unit_to_thue(kCubic, Q("3/2"), 6) == sol(6, -3, 162));
    // gamma = 2 sends (x0 : y0) to (1 : -1), a root of X + Y
    CHECK_THROWS_WITH_AS(transport_unit_to_thue(kCubic, 2, 3), "gamma yields root of F", std::domain_error);
    CHECK_THROWS_WITH_AS(transport_unit_to_thue(kCubic, 0, 1), "gamma yields root of F", std::domain_error);

    const auto a = transport_thue_to_unit(kCubic, sol(2, 1, 6), s);
    CHECK(a.beta == std::array<Rational, 3>{2, 1, 3});
    CHECK(a.gamma == Q("1/2"));
    const auto b = transport_thue_to_unit(kCubic, sol(1, 0, 1), s);
    CHECK(b.beta == std::array<Rational, 3>{1, 1, 1});
    CHECK(b.gamma == 1);
    const auto c = transport_thue_to_unit(kCubic, sol(6, -3, 162), s);
    CHECK(c.beta == std::array<Rational, 3>{6, 9, 3});
    CHECK(c.gamma == Q("3/2"));
    CHECK_THROWS_WITH_AS(transport_thue_to_unit(kCubic, sol(0, 1, -1), s), "x = a1 y", std::domain_error);
}

TEST_CASE("transport round trip") {
    const SContext s{2, 3};
    const auto f = BinaryFormSpec::split({Rational(1), Rational(3), Rational(-2)}, {Rational(1)}, 1);
    for (const auto* form : {&kCubic, &f}) {
        const SContext ctx = transport_context(*form, s);
        for (const auto& t : solve_thue_mahler(*form, s, 60)) {
            if ((t.x - form->roots()[0] * t.y).is_zero()) continue;
            const auto u = transport_thue_to_unit(*form, t, s);
            for (const auto& b : u.beta) CHECK(is_s_unit(b, ctx));
            CHECK(transport_unit_to_thue(*form, u.gamma, u.beta[0]) == t);
        }
    }
}

TEST_CASE("unit and point dictionary") {
    const SContext s{2, 3};
    CHECK(unit_to_point(4, -3, s) == ProjPoint{4, 1});
    CHECK(point_to_unit(ProjPoint{4, 1}, s) == 4);
    CHECK(unit_to_point(Q("1/2"), Q("1/2"), SContext{2}) == ProjPoint{1, 2});
    CHECK_THROWS_AS(unit_to_point(5, -4, s), std::invalid_argument);
    CHECK_THROWS_AS(point_to_unit(ProjPoint{5, 1}, s), std::invalid_argument);
    for (const auto& c : solve_unit_equation(1, s, 4)) {
        const Rational e1 = -c.entries()[1], e2 = -c.entries()[2];
        const ProjPoint p = unit_to_point(e1, e2, s);
        CHECK(is_s_integral(p, zero_one_infinity(), s));
        CHECK(point_to_unit(p, s) == e1);
    }
}
