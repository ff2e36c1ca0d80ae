#include "dioph/projective.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace dioph;
using testing::Q;
using testing::Qs;

namespace {

std::vector<Hyperplane> lines01inf() { return {ProjPoint{1, 0}, ProjPoint{0, 1}, ProjPoint{1, -1}}; }

}  // namespace

TEST_CASE("normalize examples") {
    CHECK(normalize(Qs({"2/3", "4/3"})) == ProjPoint{1, 2});
    CHECK(normalize(Qs({"-3", "6", "-9"})) == ProjPoint{1, -2, 3});
    CHECK(normalize(Qs({"0", "-5"})) == ProjPoint{0, 1});
    CHECK_THROWS_WITH_AS(normalize(Qs({"0", "0"})), "not a projective point", std::invalid_argument);
    CHECK(ProjPoint{1, -2, 3}.to_string() == "(1:-2:3)");
}

TEST_CASE("normalize is idempotent and scale invariant") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        std::vector<Rational> v{testing::random_rational(rng, 50), testing::random_rational(rng, 50),
                                testing::random_nonzero(rng, 50)};
        const ProjPoint p = normalize(v);
        CHECK(normalize(p.rationals()) == p);
        const Rational t = testing::random_nonzero(rng, 1000);
        for (auto& x : v) x *= t;
        CHECK(normalize(v) == p);
    }
}

TEST_CASE("reduction examples") {
    CHECK(reduce_mod_p(ProjPoint{2, 3}, 3).coords == IVector{1, 0});
    CHECK(reduce_mod_p(ProjPoint{1, 1}, 5).coords == IVector{1, 1});
    CHECK(reduce_mod_p(ProjPoint{4, 6, 9}, 2).coords == IVector{0, 0, 1});
    CHECK_THROWS_AS(reduce_mod_p(ProjPoint{1, 1}, 4), std::invalid_argument);
}

TEST_CASE("reduction ignores rescaling by p-adic units") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 300; ++i) {
        const std::vector<Rational> v{testing::random_rational(rng, 30), testing::random_nonzero(rng, 30),
                                      testing::random_rational(rng, 30)};
        const ProjPoint p = normalize(v);
        for (long prime : {2L, 3L, 7L}) {
            Rational t;
            do t = testing::random_nonzero(rng, 40);
            while (valuation(t, prime) != 0);
            std::vector<Rational> w = p.rationals();
            for (auto& x : w) x *= t;
            CHECK(reduce_mod_p(normalize(w), prime) == reduce_mod_p(p, prime));
        }
    }
}

TEST_CASE("integrality examples") {
    const SContext s23{2, 3};
    CHECK(is_s_integral(ProjPoint{4, 1}, lines01inf(), s23));
    const std::vector<Hyperplane> plane{ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}, ProjPoint{0, 1, 1}};
    CHECK(is_s_integral(ProjPoint{1, 1, 1}, plane, SContext{2}));
    CHECK_FALSE(is_s_integral(ProjPoint{5, 1}, lines01inf(), s23));
    CHECK_THROWS_WITH_AS(is_s_integral(ProjPoint{1, 1}, lines01inf(), s23), "point on removed divisor", PointOnDivisor);
}

TEST_CASE("global and local integrality agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-12, 12);
    const SContext s{2, 3};
    const auto arr = standard_arrangement(2);
    int tested = 0, integral = 0;
    while (tested < 400) {
        const ProjPoint p{c(rng), c(rng), c(rng) == 0 ? 1 : c(rng)};
        long top = 0;
        bool on = false;
        for (const auto& h : arr) {
            const Integer v = evaluate(h, p);
            if (v == 0) on = true;
            top = std::max(top, Integer(abs(v)).get_si());
        }
        if (on) continue;
        ++tested;
        const bool global = is_s_integral(p, arr, s);
        integral += global;
        CHECK(global == is_s_integral_local(p, arr, s, static_cast<unsigned long>(top)));
        // the reduction characterization, prime by prime
        bool avoids = true;
        for (long q = 5; q <= top; ++q) {
            if (!is_prime(Integer(q))) continue;
            for (const auto& h : arr) avoids = avoids && !reduction_meets(p, h, q);
        }
        CHECK(global == avoids);
    }
    CHECK(integral > 10);
}

TEST_CASE("coordinate change examples") {
    const QMatrix shear(std::vector<QVector>{{1, -1}, {1, 1}});
    const auto c = change_coordinates(ProjPoint{2, 1}, shear);
    CHECK(c.point == ProjPoint{1, 3});
    CHECK(c.delta == SContext{2});
    const auto id = change_coordinates(ProjPoint{1, 0}, QMatrix::identity(2));
    CHECK(id.point == ProjPoint{1, 0});
    CHECK(id.delta.empty());
    const auto swap = change_coordinates(ProjPoint{1, 1}, QMatrix(std::vector<QVector>{{0, 1}, {1, 0}}));
    CHECK(swap.point == ProjPoint{1, 1});
    CHECK(swap.delta.empty());
    CHECK_THROWS_AS(change_coordinates(ProjPoint{1, 1}, QMatrix(std::vector<QVector>{{1, 1}, {1, 1}})),
                    std::domain_error);
}

TEST_CASE("integrality survives coordinate changes") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> c(-5, 5);
    const SContext s{2, 3};
    const auto arr = standard_arrangement(2);
    int checked = 0;
    for (long a = -4; a <= 4 && checked < 150; ++a)
        for (long b = -4; b <= 4 && checked < 150; ++b) {
            const ProjPoint p{1, a, b};
            bool ok = true;
            try {
                ok = is_s_integral(p, arr, s);
            } catch (const PointOnDivisor&) {
                continue;
            }
            if (!ok) continue;
            QMatrix m(3, 3);
            do
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(c(rng));
            while (m.determinant().is_zero());
            const auto moved = change_coordinates(p, m);
            std::vector<Hyperplane> marr;
            for (const auto& h : arr) {
                marr.push_back(transform_hyperplane(h, m));
                CHECK(evaluate(marr.back(), moved.point) * evaluate(h, p) != 0);
            }
            CHECK(is_s_integral(moved.point, marr, s.united(moved.delta)));
            ++checked;
        }
    CHECK(checked > 20);
}

TEST_CASE("quadratic embedding") {
    CHECK(quadratic_embed(ProjPoint{1, 2}, ProjPoint{1, 3}) == ProjPoint{1, 2, 3, 6});
    CHECK(quadratic_embed(ProjPoint{0, 1}, ProjPoint{1, 0}) == ProjPoint{0, 1, 0, 0});
    CHECK(quadratic_embed(ProjPoint{1, 1}, ProjPoint{1, 1}) == ProjPoint{1, 1, 1, 1});
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int i = 0; i < 200; ++i) {
        const ProjPoint a{c(rng), 1 + std::abs(c(rng))}, b{1 + std::abs(c(rng)), c(rng)};
        const auto q = quadratic_embed(a, b);
        CHECK(q[0] * q[3] == q[1] * q[2]);
    }
    CHECK(project_from_last(ProjPoint{2, 4, 6, 1}) == ProjPoint{1, 2, 3});
    CHECK_THROWS_AS(project_from_last(ProjPoint{0, 0, 0, 1}), std::domain_error);
    CHECK(standard_arrangement(2).back() == ProjPoint{1, 1, 1});
}
