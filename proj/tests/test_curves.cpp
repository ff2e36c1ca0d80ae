#include "dioph/curves.hpp"
#include "dioph/unitsolve.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace dioph;
using testing::Q;

namespace {

using Points = std::vector<CurvePoint>;

std::vector<Integer> Z(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

CurvePoint pt(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("family names") {
    for (Family f : {Family::Mordell, Family::Elliptic, Family::Hyperelliptic, Family::Superelliptic,
                     Family::ThueClassic, Family::SiegelUnits})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("quartic"), std::invalid_argument);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(CurveSpec::mordell(0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::elliptic(Z({1, 0, 0})).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::elliptic(Z({1, -2, 1, 0})).validate(), std::invalid_argument);  // x (x-1)^2
    CHECK_NOTHROW(CurveSpec::elliptic(Z({1, 0, 0, 1})).validate());
    CHECK_THROWS_AS(CurveSpec::hyperelliptic(Z({1, 0, -1, 0, 0})).validate(), std::invalid_argument);  // x^2 (x^2-1)
    CHECK_NOTHROW(CurveSpec::hyperelliptic(Z({1, 0, -1, 0})).validate());
    CHECK_THROWS_AS(CurveSpec::superelliptic(Z({1, 0, -1}), 2).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::superelliptic(Z({1, -3, 3, -1}), 3).validate(), std::invalid_argument);  // (x-1)^3
    CHECK_NOTHROW(CurveSpec::superelliptic(Z({1, 0, -1}), 3).validate());
    CHECK_THROWS_AS(CurveSpec::thue({Rational(0), Rational(1), Rational(1)}, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::thue({Rational(0), Rational(1), Rational(-1)}, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CurveSpec::siegel(0, 1, SContext{2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_points(CurveSpec::mordell(0), 10), std::invalid_argument);
}

TEST_CASE("golden instances") {
    const Points mordell{pt(3, -5), pt(3, 5)};
    CHECK(enumerate_points(CurveSpec::mordell(-2), 1000) == mordell);
    CHECK(enumerate_points(CurveSpec::mordell(-2), 2000) == mordell);
    const auto thue = CurveSpec::thue({Rational(0), Rational(1), Rational(-1)}, 1);
    CHECK(enumerate_points(thue, 100) == Points{pt(1, 0)});
    CHECK(enumerate_points(thue, 200) == Points{pt(1, 0)});
}

TEST_CASE("solutions lie on the curve and agree with a direct scan") {
    const auto e = CurveSpec::elliptic(Z({1, 0, 0, 17}));  // y^2 = x^3 + 17
    const auto pts = enumerate_points(e, 300);
    Points brute;
    for (long x = -300; x <= 300; ++x) {
        const long v = x * x * x + 17;
        if (v < 0) continue;
        for (long y = 0; y * y <= v; ++y)
            if (y * y == v) {
                brute.push_back(pt(x, -y));
                if (y) brute.push_back(pt(x, y));
            }
    }
    CHECK(pts == brute);
    CHECK(pts.size() == 14);  // x = 5234 lies outside the box
    for (const auto& p : pts) CHECK(on_curve(e, p));

    const auto se = CurveSpec::superelliptic(Z({1, 0, 7}), 3);  // y^3 = x^2 + 7
    for (const auto& p : enumerate_points(se, 500)) CHECK(on_curve(se, p));
    const auto he = CurveSpec::hyperelliptic(Z({1, 0, -1, 0, 1}));  // y^2 = x^4 - x^2 + 1
    const auto hp = enumerate_points(he, 200);
    CHECK(std::count(hp.begin(), hp.end(), pt(0, 1)) == 1);
    for (const auto& p : hp) CHECK(on_curve(he, p));
    CHECK_FALSE(on_curve(CurveSpec::mordell(-2), pt(3, 4)));
}

TEST_CASE("monotone in the box") {
    const auto spec = CurveSpec::mordell(8);
    std::set<CurvePoint> prev;
    for (long box : {10L, 50L, 200L}) {
        const auto pts = enumerate_points(spec, box);
        const std::set<CurvePoint> now(pts.begin(), pts.end());
        CHECK(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
        prev = now;
    }
}

TEST_CASE("unit equation family agrees with the solver") {
    const SContext s{2, 3};
    const auto pts = enumerate_points(CurveSpec::siegel(1, 1, s), 4);
    std::set<CurvePoint> expected;
    for (const auto& c : solve_unit_equation(1, s, 4)) expected.insert({-c.entries()[1], -c.entries()[2]});
    CHECK(std::set<CurvePoint>(pts.begin(), pts.end()) == expected);
    for (const auto& p : enumerate_points(CurveSpec::siegel(3, Q("-1/2"), SContext{2, 5}), 3))
        CHECK(3 * p.first - p.second / 2 == 1);
}

TEST_CASE("cap") {
    CHECK_THROWS_AS(enumerate_points(CurveSpec::thue({Rational(0), Rational(1), Rational(-1)}, 1), 1000, 100),
                    CapExceeded);
}
