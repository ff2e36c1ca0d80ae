#include "dioph/linalg.hpp"
#include "dioph/poly.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace dioph;
using testing::Q;

TEST_CASE("matrix basics") {
    const QMatrix m(std::vector<QVector>{{1, 2}, {3, 4}});
    CHECK(m.determinant() == -2);
    CHECK(m * m.inverse() == QMatrix::identity(2));
    CHECK(m.apply(QVector{1, 1}) == QVector{3, 7});
    CHECK(m.apply_left(QVector{1, 1}) == QVector{4, 6});
    CHECK(m.rank() == 2);
    const QMatrix singular(std::vector<QVector>{{1, 2}, {2, 4}});
    CHECK(singular.rank() == 1);
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("nullspace and combinations") {
    const QMatrix m(std::vector<QVector>{{1, 1, 1}});
    const auto ns = nullspace(m.row_vectors(), 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(dot(m.row(0), v) == 0);
    const auto c = solve_combination({QVector{1, 0}, QVector{0, 1}}, QVector{Q("1/2"), 3});
    REQUIRE(c);
    CHECK(*c == QVector{Q("1/2"), 3});
    CHECK_FALSE(solve_combination({QVector{1, 1}}, QVector{1, 2}));
}

TEST_CASE("random inverses") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        QMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = testing::random_rational(rng, 9);
        if (m.determinant().is_zero()) continue;
        CHECK(m.inverse() * m == QMatrix::identity(3));
        CHECK((m * m).determinant() == m.determinant() * m.determinant());
    }
}

TEST_CASE("polynomials") {
    const Poly f = Poly::from_descending({1, 0, 0, -2});
    CHECK(f.degree() == 3);
    CHECK(f(2) == 6);
    CHECK(is_squarefree(f));
    CHECK(discriminant(f) == -108);
    CHECK(rational_roots(Poly::from_descending({1, 0, -1})) == std::vector<Rational>{-1, 1});
    CHECK(rational_roots(Poly::from_descending({2, -1})) == std::vector<Rational>{Q("1/2")});
    const Poly sq = Poly::from_descending({1, -2, 1}) * Poly::from_descending({1, 3});  // (X-1)^2 (X+3)
    CHECK_FALSE(is_squarefree(sq));
    const auto dec = squarefree_decomposition(sq);
    int total = 0;
    for (const auto& [g, mult] : dec) total += g.degree() * mult;
    CHECK(total == 3);
    CHECK(irreducible_over_q(f) == std::optional<bool>(true));
    CHECK(irreducible_over_q(Poly::from_descending({1, 0, -1})) == std::optional<bool>(false));
    CHECK(resultant(Poly::from_descending({1, -1}), Poly::from_descending({1, -3})) == -2);
}
