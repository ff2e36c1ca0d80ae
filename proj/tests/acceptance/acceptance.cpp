// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every criterion is checked against an oracle that does not go through the code under test
// where such an oracle is cheap (direct scans, exact identities, hand-listed values).

#include "dioph/approx.hpp"
#include "dioph/curves.hpp"
#include "dioph/hyperarr.hpp"
#include "dioph/projective.hpp"
#include "dioph/thuemahler.hpp"
#include "dioph/unitsolve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace dioph;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// units +-2^a 3^b with |a|, |b| <= bound, listed without the enumerator
std::vector<Rational> units23(int bound) {
    std::vector<Rational> out;
    for (int sign : {1, -1})
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b) out.push_back(Rational(sign) * Rational(2).pow(a) * Rational(3).pow(b));
    return out;
}

std::set<std::vector<Rational>> classes_of(const std::vector<ClassRep>& v) {
    std::set<std::vector<Rational>> out;
    for (const auto& c : v) out.insert(c.entries());
    return out;
}

Rational random_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

const BinaryFormSpec& cubic() {
    static const BinaryFormSpec f = BinaryFormSpec::split({Rational(0), Rational(1), Rational(-1)});
    return f;
}

// 1. unit equation soundness and stability
void unit_equation(Outcome& o) {
    const auto t0 = Clock::now();
    const SContext s{2, 3};
    const auto b12 = solve_unit_equation(1, s, 12);
    const auto b20 = solve_unit_equation(1, s, 20);
    const double elapsed = seconds_since(t0);
    o.require(classes_of(b12) == classes_of(b20), "B=12 and B=20 differ");
    for (const auto& c : b20) {
        const auto& e = c.entries();
        o.require(e[0] + e[1] + e[2] == 0, "nonzero sum");
        for (const auto& x : e) o.require(is_s_unit(x, s), "entry not an S-unit");
    }
    // direct scan: 1 + u + v = 0 with u in the box
    const auto units = units23(20);
    const std::set<Rational> unit_set(units.begin(), units.end());
    std::set<std::vector<Rational>> scan;
    for (const auto& u : units) {
        const Rational v = -1 - u;
        if (unit_set.count(v) && !(u == -1) && !(v == -1) && !(u + v == 0)) scan.insert({Rational(1), u, v});
    }
    o.require(scan == classes_of(b20), "scan oracle disagrees");
    const auto got = classes_of(b20);
    for (auto t : {std::vector<Rational>{1, 1, -2}, {1, 8, -9}, {1, -9, 8}, {1, 3, -4}})
        o.require(got.count(t) == 1, "missing a listed class");
    o.require(elapsed < 30, "too slow");
    o.detail << b20.size() << " classes, " << elapsed << " s";
}

// 2. Siegel identity
void siegel(Outcome& o) {
    std::mt19937_64 rng(2002);
    int done = 0;
    while (done < 1000) {
        std::array<Rational, 3> a{random_rational(rng, 1'000'000), random_rational(rng, 1'000'000),
                                  random_rational(rng, 1'000'000)};
        if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2]) continue;
        o.require(siegel_residue(a, random_rational(rng, 1'000'000), random_rational(rng, 1'000'000)).is_zero(),
                  "nonzero residue");
        ++done;
    }
    o.detail << done << " inputs";
}

// 3. transport round trip
void transport(Outcome& o) {
    const SContext s{2, 3};
    const auto sols = solve_thue_mahler(cubic(), s, 100);
    std::size_t checked = 0;
    for (const auto& t : sols) {
        if (t.x.is_zero()) continue;  // beta_1 = x - 0 y
        const auto u = transport_thue_to_unit(cubic(), t, s);
        o.require(transport_unit_to_thue(cubic(), u.gamma, u.beta[0]) == t, "round trip of " + t.point.to_string());
        ++checked;
    }
    const auto worked = transport_thue_to_unit(cubic(), {2, 1, 6, ProjPoint{2, 1}}, s);
    o.require(worked.gamma == Rational(1, 2), "gamma of (2,1,6)");
    o.require(worked.beta == std::array<Rational, 3>{2, 1, 3}, "beta of (2,1,6)");
    o.require(transport_unit_to_thue(cubic(), Rational(1, 2), 2) == TMSolution{2, 1, 6, ProjPoint{2, 1}},
              "(2,1,6) from gamma = 1/2");
    o.detail << checked << " of " << sols.size() << " classes";
}

// 4. dictionary between unit solutions and integral points of P^1 minus {0, 1, oo}
void dictionary(Outcome& o) {
    const SContext s{2, 3};
    std::set<ProjPoint> scanned;
    for (long x = -200; x <= 200; ++x)
        for (long y = 0; y <= 200; ++y) {
            if (x == 0 || y == 0 || x == y || std::gcd(x, y) != 1) continue;
            const ProjPoint p{x, y};
            if (is_s_integral(p, zero_one_infinity(), s)) scanned.insert(p);
        }
    const auto classes = solve_unit_equation(1, s, 8);
    std::set<Rational> units;
    std::set<ProjPoint> image;
    for (const auto& c : classes) {
        const Rational e1 = -c.entries()[1], e2 = -c.entries()[2];
        units.insert(e1);
        const ProjPoint p = unit_to_point(e1, e2, s);
        if (abs(p[0]) <= 200 && abs(p[1]) <= 200) image.insert(p);
    }
    o.require(scanned == image, "point set differs from unit image");
    for (const auto& p : scanned) o.require(units.count(point_to_unit(p, s)) == 1, "point without a class");
    o.detail << scanned.size() << " points";
}

// 5. approximation inequality for X^3 - 2
void approximation(Outcome& o) {
    const IntCoeffs f{1, 0, 0, -2};
    const auto sols = find_thue_solutions(f, Integer(1), 1000);
    // independent scan over y with a floating cube root
    std::vector<std::pair<Integer, Integer>> scan;
    for (long y = -1000; y <= 1000; ++y) {
        const double r = std::cbrt(1.0 + 2.0 * double(y) * y * y);
        for (long x = std::lround(r) - 1; x <= std::lround(r) + 1; ++x)
            if (std::abs(x) <= 1000 && x * x * x - 2 * y * y * y == 1) scan.emplace_back(x, y);
    }
    std::sort(scan.begin(), scan.end());
    o.require(sols == scan, "solution scan disagrees");
    o.require(sols == std::vector<std::pair<Integer, Integer>>{{-1, -1}, {1, 0}}, "unexpected solutions");
    const auto kappa = kappa_backward(f, Integer(1), 64);
    o.require(kappa.size() == 1 && kappa[0].kappa.lo().to_double() >= 0.8398 &&
                  kappa[0].kappa.hi().to_double() <= 0.8400,
              "kappa enclosure");
    for (const auto& [x, y] : sols) {
        if (y == 0) {
            bool rejected = false;
            try {
                verify_inequality(f, Integer(1), x, y, 64);
            } catch (const std::invalid_argument&) {
                rejected = true;
            }
            o.require(rejected, "y = 0 accepted");
            continue;
        }
        const auto r = verify_inequality(f, Integer(1), x, y, 64);
        o.require(r.holds == Decision::True, "inequality not decided true");
        o.require(r.kappa.lo().to_double() >= 0.8398 && r.kappa.hi().to_double() <= 0.8400, "report kappa");
    }
    o.detail << "kappa " << kappa[0].kappa.to_string(8) << ", (1,0) rejected as y = 0";
}

// points of X_0 + ... + X_n = 0 with coordinates in [-h, h], up to sign
std::vector<QVector> l0_points(std::size_t n, long h) {
    std::vector<QVector> out;
    std::vector<long> c(n, -h);
    while (true) {
        long sum = 0;
        for (long v : c) sum += v;
        if (std::abs(sum) <= h) {
            QVector v;
            for (long x : c) v.emplace_back(x);
            v.emplace_back(-sum);
            const bool zero = std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
            if (!zero) {
                const auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) { return !q.is_zero(); });
                long g = 0;
                for (long x : c) g = std::gcd(g, x);
                g = std::gcd(g, std::abs(sum));
                if (first->num() > 0 && g == 1) out.push_back(v);
            }
        }
        std::size_t k = 0;
        while (k < n && ++c[k] > h) c[k++] = -h;
        if (k == n) break;
    }
    return out;
}

// 6. traces of subspaces on the coordinate hyperplanes
void traces(Outcome& o) {
    std::size_t lines = 0, violations = 0;
    for (std::size_t n : {2u, 3u, 4u}) {
        const auto pts = l0_points(n, 3);
        std::set<std::vector<Rational>> seen;  // line bases in echelon form
        for (const auto& w : pts) {
            if (!is_nondegenerate(w, 1) || std::any_of(w.begin(), w.end(), [](const Rational& q) { return q.is_zero(); }))
                continue;
            for (const auto& v : pts) {
                QMatrix m(std::vector<QVector>{w, v});
                if (m.rank() != 2) continue;
                const auto basis = nullspace(nullspace(m.row_vectors(), n + 1), n + 1);
                std::vector<Rational> key;
                for (const auto& row : basis) key.insert(key.end(), row.begin(), row.end());
                key.insert(key.end(), w.begin(), w.end());
                if (!seen.insert(key).second) continue;
                TraceReport r{};
                try {
                    r = distinct_traces(SubspaceModel(m), normalize(w));
                } catch (const std::invalid_argument&) {
                    continue;  // the line sits in some X_i = 0
                }
                if (!r.hypothesis) continue;
                ++lines;
                if (r.count < 3) ++violations;
            }
        }
    }
    o.require(violations == 0, "line with fewer than 3 traces");
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<long> c(-5, 5);
    std::size_t sampled = 0, bad = 0;
    while (sampled < 500) {
        const std::size_t n = 2 + sampled % 4;
        const std::size_t s = 1 + rng() % (n - 1);
        std::vector<QVector> rows;
        for (std::size_t i = 0; i <= s; ++i) {
            QVector v(n + 1);
            Rational last;
            for (std::size_t j = 0; j < n; ++j) last -= (v[j] = Rational(c(rng)));
            v[n] = last;
            rows.push_back(v);
        }
        const QVector& w = rows[0];
        if (std::any_of(w.begin(), w.end(), [](const Rational& q) { return q.is_zero(); }) || !is_nondegenerate(w, 1))
            continue;
        const QMatrix m(rows);
        if (m.rank() != s + 1) continue;
        TraceReport r{};
        try {
            r = distinct_traces(SubspaceModel(m), normalize(w));
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (!r.hypothesis) continue;
        ++sampled;
        if (r.count < s + 2) ++bad;
    }
    o.require(bad == 0, "subspace with fewer than s+2 traces");
    o.detail << lines << " lines, " << sampled << " random subspaces, " << violations + bad << " violations";
}

// 7. covering hyperplanes for n = 2
void covering(Outcome& o) {
    const SContext s{2, 3};
    const auto cov = covering_hyperplanes(2, s, 3);
    o.require(verify_covering(cov.points, cov.hyperplanes()), "uncovered point");
    // direct scan of (1 : u : v) with u, v, 1 + u + v units of exponents at most 3
    const auto units = units23(3);
    const std::set<Rational> unit_set(units.begin(), units.end());
    std::set<ProjPoint> scan;
    for (const auto& u : units)
        for (const auto& v : units)
            if (unit_set.count(1 + u + v)) scan.insert(normalize(QVector{1, u, v}));
    o.require(scan == std::set<ProjPoint>(cov.points.begin(), cov.points.end()), "point scan disagrees");
    std::set<ProjPoint> image;
    for (const auto& c : solve_unit_equation(2, s, 3)) image.insert(tuple_to_point(c.entries()));
    o.require(image == std::set<ProjPoint>(cov.nondegenerate.begin(), cov.nondegenerate.end()),
              "non-degenerate list differs from unit classes");
    o.detail << cov.points.size() << " points, " << cov.nondegenerate.size() << " non-degenerate, "
             << cov.hyperplanes().size() << " hyperplanes";
}

bool no_vanishing_subsum(const std::vector<Rational>& t) {
    const std::size_t m = t.size();
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        Rational sum;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) sum += t[i];
        if (sum.is_zero()) return false;
    }
    return true;
}

// 8. gamma and binomial lifts
void lifts(Outcome& o) {
    const SContext s{2}, s23{2, 3};
    std::size_t lifted = 0;
    for (const auto& c : solve_unit_equation(1, s, 6)) {
        const auto l = lift_gamma(c, 3, 1, s);
        const auto& e = l.tuple.entries();
        o.require(l.extended == s23, "extension is not {2,3}");
        o.require(e.size() == 4, "length");
        o.require(std::accumulate(e.begin(), e.end(), Rational(0)).is_zero(), "sum");
        for (const auto& x : e) o.require(is_s_unit(x, s23), "entry not a unit over {2,3}");
        o.require(no_vanishing_subsum(e), "degenerate lift");
        ++lifted;
    }
    std::mt19937_64 rng(8008);
    for (unsigned m = 1; m <= 8; ++m)
        for (int i = 0; i < 100; ++i) {
            const auto t = binomial_terms(random_rational(rng, 10'000), m);
            o.require(std::accumulate(t.begin(), t.end(), Rational(0)).is_zero(), "binomial identity");
        }
    const auto a = lift_binomial(3, 2, s23);
    o.require(a.tuple.entries() == std::vector<Rational>{4, 6, -9, -1} && !a.degenerate, "(3, 2) instance");
    o.require(lift_binomial(2, 2, s).degenerate, "(2, 2) instance not flagged");
    o.detail << lifted << " gamma lifts, 800 binomial identities";
}

// 9. golden curve instances
void curves(Outcome& o) {
    using Points = std::vector<CurvePoint>;
    Points mordell_scan;
    for (long x = -1000; x <= 1000; ++x) {
        const long v = x * x * x - 2;
        if (v < 0) continue;
        const long r = std::lround(std::sqrt(double(v)));
        for (long y = std::max(0L, r - 1); y <= r + 1; ++y)
            if (y * y == v) {
                mordell_scan.push_back({Rational(x), Rational(-y)});
                if (y) mordell_scan.push_back({Rational(x), Rational(y)});
            }
    }
    Points thue_scan;
    for (long x = -100; x <= 100; ++x)
        for (long y = -100; y <= 100; ++y)
            if (x * (x - y) * (x + y) == 1) thue_scan.push_back({Rational(x), Rational(y)});
    const Points m1000 = enumerate_points(CurveSpec::mordell(-2), 1000);
    const Points m2000 = enumerate_points(CurveSpec::mordell(-2), 2000);
    const auto thue = CurveSpec::thue({Rational(0), Rational(1), Rational(-1)}, 1);
    const Points t100 = enumerate_points(thue, 100), t200 = enumerate_points(thue, 200);
    o.require(m1000 == mordell_scan, "Mordell scan disagrees");
    o.require(m1000 == Points{{3, -5}, {3, 5}}, "Mordell golden");
    o.require(m2000 == m1000, "Mordell unstable");
    o.require(t100 == thue_scan, "Thue scan disagrees");
    o.require(t100 == Points{{1, 0}}, "Thue golden");
    o.require(t200 == t100, "Thue unstable");
    o.detail << "Mordell " << m1000.size() << " points, Thue " << t100.size() << " point";
}

// 10. integrality under coordinate changes
void coordinates(Outcome& o) {
    std::mt19937_64 rng(10010);
    std::uniform_int_distribution<long> c(-6, 6), dim(1, 3);
    const std::vector<long> small_primes{2, 3, 5, 7};
    std::size_t done = 0, integral = 0;
    while (done < 200) {
        const std::size_t n = dim(rng);
        std::vector<Rational> raw;
        for (std::size_t i = 0; i <= n; ++i) raw.emplace_back(c(rng));
        if (std::all_of(raw.begin(), raw.end(), [](const Rational& q) { return q.is_zero(); })) continue;
        const ProjPoint p = normalize(raw);
        std::vector<Hyperplane> arr;
        bool ok = true;
        for (std::size_t k = 0; k < n + 2 && ok; ++k) {
            std::vector<Integer> h;
            for (std::size_t i = 0; i <= n; ++i) h.emplace_back(c(rng));
            if (std::all_of(h.begin(), h.end(), [](const Integer& x) { return x == 0; })) {
                ok = false;
                break;
            }
            arr.emplace_back(h);
            ok = evaluate(arr.back(), p) != 0;
        }
        if (!ok) continue;
        std::vector<Integer> chosen;
        for (long q : small_primes)
            if (rng() % 2) chosen.emplace_back(q);
        SContext s(chosen);
        if (done % 2 == 0) {  // widen S until p is integral, so both outcomes are well represented
            std::vector<Rational> values;
            for (const auto& h : arr) values.emplace_back(evaluate(h, p));
            s = extend_s(s, values);
        }
        QMatrix m(n + 1, n + 1);
        do
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j) m(i, j) = Rational(Integer(c(rng)), Integer(1 + rng() % 3));
        while (m.determinant().is_zero());
        const auto moved = change_coordinates(p, m);
        std::vector<Hyperplane> marr;
        for (const auto& h : arr) marr.push_back(transform_hyperplane(h, m));
        const SContext wide = s.united(moved.delta);
        const bool before = is_s_integral(p, arr, s);
        integral += before;
        // integral over S stays integral over S + delta, and over S + delta the two agree exactly
        if (before) o.require(is_s_integral(moved.point, marr, wide), "lost integrality");
        o.require(is_s_integral(p, arr, wide) == is_s_integral(moved.point, marr, wide), "S' equivalence");
        ++done;
    }
    o.detail << done << " triples, " << integral << " integral before the change";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"unit equation soundness and stability", unit_equation},
        {"Siegel identity", siegel},
        {"Thue-Mahler to unit transport round trip", transport},
        {"unit solutions and integral points of P^1 minus three points", dictionary},
        {"approximation inequality for X^3 - 2", approximation},
        {"traces of subspaces on coordinate hyperplanes", traces},
        {"covering hyperplanes for the standard arrangement of P^2", covering},
        {"gamma and binomial lifts", lifts},
        {"golden curve instances", curves},
        {"integrality under coordinate changes", coordinates},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failed += !o.pass;
        std::printf("%s %2zu %s (%s) [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.str().c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
