#include "dioph/suite.hpp"

#include "dioph/approx.hpp"
#include "dioph/hyperarr.hpp"
#include "dioph/projective.hpp"
#include "dioph/thuemahler.hpp"
#include "dioph/unitsolve.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dioph {

bool SuiteReport::passed() const {
    if (!complete) return false;
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"prop21", "prop51", "prop61", "potpourri"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;
using Outcome = std::pair<bool, std::string>;

struct Check {
    std::string name;
    std::string topic;
    std::function<Outcome()> run;
};

std::string count_detail(std::size_t ok, std::size_t total) {
    return std::to_string(ok) + "/" + std::to_string(total);
}

Rational random_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

// ---------------------------------------------------------------- approximation

std::vector<Check> approximation_checks(std::uint64_t) {
    struct Instance {
        IntCoeffs f;
        long k;
    };
    const std::vector<Instance> instances{{{1, 0, 0, -2}, 1}, {{1, 0, -1, 1}, 1}, {{1, 1, -2, -1}, 1}, {{1, 0, 0, -3}, -2}};
    std::vector<Check> checks;
    for (const auto& inst : instances) {
        std::ostringstream name;
        name << "inequality at every solution, f =";
        for (const auto& c : inst.f) name << ' ' << c;
        name << ", k = " << inst.k;
        checks.push_back({name.str(), "Thue solutions approximate a root of f", [inst]() -> Outcome {
                              const auto sols = find_thue_solutions(inst.f, Integer(inst.k), 100);
                              std::size_t holds = 0, above = 0, violations = 0, total = 0;
                              for (const auto& [x, y] : sols) {
                                  if (y == 0) continue;
                                  ++total;
                                  const auto r = verify_inequality(inst.f, Integer(inst.k), x, y, 64);
                                  if (r.holds == Decision::True) ++holds;
                                  if (r.above_floor == Decision::True) {
                                      ++above;
                                      if (r.holds != Decision::True) ++violations;
                                  }
                              }
                              return {violations == 0, count_detail(holds, total) + " within the bound, " +
                                                           std::to_string(above) + " above the threshold, " +
                                                           std::to_string(violations) + " violations"};
                          }});
    }
    checks.push_back({"kappa for X^3 - 2", "approximation constant", []() -> Outcome {
                          const auto kb = kappa_backward(IntCoeffs{1, 0, 0, -2}, Integer(1), 64);
                          const Rational lo = Rational::parse("4199/5000"), hi = Rational::parse("21/25");
                          const bool ok = kb.size() == 1 &&
                                          certainly_le(Interval::from_rational(lo, 64), kb[0].kappa) == Decision::True &&
                                          certainly_le(kb[0].kappa, Interval::from_rational(hi, 64)) == Decision::True;
                          return {ok, kb.empty() ? "no real root" : kb[0].kappa.to_string()};
                      }});
    checks.push_back({"convergents of 2^(1/3) satisfy the forward bound", "good approximations give small values",
                      []() -> Outcome {
                          const IntCoeffs f{1, 0, 0, -2};
                          const auto roots = isolate_roots(f, 256);
                          const auto real = roots.real_indices();
                          const auto kappa = kappa_backward(roots, Integer(1));
                          const Rational kq = kappa[0].kappa.hi().to_rational();
                          std::size_t ok = 0, total = 0;
                          for (const auto& c : convergents(roots.roots[real[0]].value.re, 12)) {
                              const Integer q = c.den();
                              if (Rational(Integer(q * q * q)) < kq) continue;
                              const auto rep = forward_bound(f, kq, c, 128);
                              if (rep.approximant != Decision::True) continue;
                              ++total;
                              if (rep.within == Decision::True) ++ok;
                          }
                          return {total > 0 && ok == total, count_detail(ok, total) + " approximants within the bound"};
                      }});
    return checks;
}

// ---------------------------------------------------------------- Thue-Mahler and unit equations

std::vector<Check> transport_checks(std::uint64_t seed) {
    std::vector<Check> checks;
    checks.push_back({"linear relation among the b_i", "Siegel identity", [seed]() -> Outcome {
                          std::mt19937_64 rng(seed);
                          std::size_t ok = 0;
                          const std::size_t total = 300;
                          for (std::size_t i = 0; i < total; ++i) {
                              std::array<Rational, 3> a;
                              do {
                                  for (auto& r : a) r = random_rational(rng, 1000000);
                              } while (a[0] == a[1] || a[1] == a[2] || a[0] == a[2]);
                              if (siegel_residue(a, random_rational(rng, 1000000), random_rational(rng, 1000000))
                                      .is_zero())
                                  ++ok;
                          }
                          return {ok == total, count_detail(ok, total) + " residues vanish"};
                      }});
    checks.push_back({"Thue-Mahler to unit equation and back", "Thue-Mahler finiteness implies unit finiteness",
                      []() -> Outcome {
                          const auto f = BinaryFormSpec::split({Rational(0), Rational(1), Rational(-1)});
                          const SContext s{2, 3};
                          std::size_t ok = 0, total = 0;
                          for (const auto& sol : solve_thue_mahler(f, s, 60)) {
                              if (sol.x == f.roots()[0] * sol.y) continue;
                              ++total;
                              const auto img = transport_thue_to_unit(f, sol, s);
                              if (transport_unit_to_thue(f, img.gamma, img.beta[0]) == sol) ++ok;
                          }
                          return {total > 0 && ok == total, count_detail(ok, total) + " classes round-trip"};
                      }});
    checks.push_back({"shear onto XY(X-Y)", "change of variables between forms", []() -> Outcome {
                          const SContext s{2, 3};
                          std::ostringstream d;
                          bool ok = true;
                          const auto first = BinaryFormSpec::split({Rational(0), Rational(1), Rational(-1)});
                          const auto a = shear_transform(first, ShearDirection::IToII, solve_thue_mahler(first, s, 40), s);
                          const auto general = BinaryFormSpec::split({Rational(1), Rational(2), Rational(4)});
                          const auto gsols = solve_thue_mahler(general, s, 40);
                          const auto b = shear_transform(general, ShearDirection::IIToI, gsols, s);
                          ok = a.target.kind() == FormKind::XYXminusY && b.target.kind() == FormKind::XYXminusY &&
                               b.solutions.size() == gsols.size();
                          for (const auto& t : b.solutions)
                              ok = ok && eval_form(b.target, t.x, t.y) == b.target.k() * t.eps;
                          d << a.solutions.size() << " and " << b.solutions.size() << " transported classes";
                          return {ok, d.str()};
                      }});
    checks.push_back({"points of P^1 minus three points versus unit classes", "dictionary between the two problems",
                      []() -> Outcome {
                          const SContext s{2, 3};
                          const auto arr = zero_one_infinity();
                          const auto points = s_integral_points(arr, s, 60);
                          std::set<ProjPoint> image;
                          for (const auto& c : solve_unit_equation(1, s, 6)) {
                              const auto& e = c.entries();
                              image.insert(unit_to_point(-Rational(1) / e[2], -e[1] / e[2], s));
                          }
                          std::size_t missing = 0, extra = 0;
                          for (const auto& p : points)
                              if (!image.count(p)) ++missing;
                          for (const auto& p : image) {
                              bool small = true;
                              for (const auto& c : p.coords()) small = small && abs(c) <= 60;
                              if (small && !std::binary_search(points.begin(), points.end(), p)) ++extra;
                          }
                          return {missing == 0 && extra == 0,
                                  std::to_string(points.size()) + " points, " + std::to_string(missing) +
                                      " without class, " + std::to_string(extra) + " classes without point"};
                      }});
    checks.push_back({"unit classes stable under a larger box", "finiteness of the unit equation", []() -> Outcome {
                          const SContext s{2, 3};
                          const auto a = solve_unit_equation(1, s, 8), b = solve_unit_equation(1, s, 12);
                          bool valid = true;
                          for (const auto& c : b) valid = valid && is_valid_solution(c.entries(), s);
                          return {a == b && valid, std::to_string(b.size()) + " classes"};
                      }});
    checks.push_back({"three-term to four-term lifts", "longer unit equations from shorter ones", []() -> Outcome {
                          const SContext s{2};
                          std::size_t ok = 0, total = 0;
                          for (const auto& c : solve_unit_equation(1, s, 6)) {
                              ++total;
                              const auto l = lift_gamma(c, Rational(3), 1, s);
                              if (is_valid_solution(l.tuple.entries(), l.extended)) ++ok;
                          }
                          const auto b = lift_binomial(Rational(3), 2, SContext{2, 3});
                          const bool bin = !b.degenerate && lift_binomial(Rational(2), 2, SContext{2}).degenerate;
                          return {ok == total && bin, count_detail(ok, total) + " lifts valid"};
                      }});
    return checks;
}

// ---------------------------------------------------------------- hyperplane coverings

std::vector<Check> covering_checks(std::uint64_t seed) {
    std::vector<Check> checks;
    checks.push_back({"lines in the plane sum-zero hyperplane", "distinct traces on the coordinate hyperplanes",
                      []() -> Outcome {
                          std::size_t total = 0, bad = 0;
                          for (std::size_t n : {2u, 3u}) {
                              const long h = 2;
                              std::vector<std::vector<long>> pts;
                              std::vector<long> v(n + 1, -h);
                              while (true) {
                                  long sum = 0;
                                  for (long x : v) sum += x;
                                  if (sum == 0) pts.push_back(v);
                                  std::size_t i = 0;
                                  while (i <= n && v[i] == h) v[i++] = -h;
                                  if (i > n) break;
                                  ++v[i];
                              }
                              for (const auto& w : pts) {
                                  std::vector<Rational> t(w.begin(), w.end());
                                  if (!is_nondegenerate(t, 1)) continue;
                                  const ProjPoint wp(IVector(w.begin(), w.end()));
                                  for (const auto& u : pts) {
                                      QMatrix m(std::vector<QVector>{QVector(w.begin(), w.end()),
                                                                     QVector(u.begin(), u.end())});
                                      if (m.rank() != 2) continue;
                                      ++total;
                                      const auto r = distinct_traces(SubspaceModel(m), wp);
                                      if (!r.hypothesis || r.count < r.required) ++bad;
                                  }
                              }
                          }
                          return {bad == 0 && total > 0, std::to_string(bad) + " violations in " + std::to_string(total) + " lines"};
                      }});
    checks.push_back({"cover of P^2 minus four lines", "S-integral points lie on finitely many hyperplanes",
                      []() -> Outcome {
                          const SContext s{2, 3};
                          const auto cov = covering_hyperplanes(2, s, 3);
                          std::set<ProjPoint> from_classes;
                          for (const auto& c : solve_unit_equation(2, s, 3)) from_classes.insert(tuple_to_point(c.entries()));
                          const std::set<ProjPoint> nondeg(cov.nondegenerate.begin(), cov.nondegenerate.end());
                          const bool ok = verify_covering(cov.points, cov.hyperplanes()) && nondeg == from_classes;
                          return {ok, std::to_string(cov.points.size()) + " points, " +
                                          std::to_string(cov.hyperplanes().size()) + " hyperplanes"};
                      }});
    checks.push_back({"cover of a non-standard arrangement", "reduction to the standard arrangement", []() -> Outcome {
                          const SContext s{2, 3};
                          const LinearFormSystem sys({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1},
                                                      ProjPoint{1, 2, 3}});
                          const auto cov = cover_arrangement(sys, s, 6);
                          const auto pts = s_integral_points(sys.forms(), s, 6);
                          return {verify_covering(pts, cov.hyperplanes),
                                  std::to_string(pts.size()) + " points, " + std::to_string(cov.hyperplanes.size()) +
                                      " hyperplanes"};
                      }});
    checks.push_back({"integrality under coordinate changes", "S-integrality is a projective notion", [seed]() -> Outcome {
                          std::mt19937_64 rng(seed);
                          std::uniform_int_distribution<long> small(-4, 4);
                          const SContext s{2, 3};
                          std::size_t total = 0, bad = 0;
                          while (total < 100) {
                              QMatrix m(3, 3);
                              for (std::size_t i = 0; i < 3; ++i)
                                  for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(small(rng));
                              if (m.determinant().is_zero()) continue;
                              std::vector<Hyperplane> arr;
                              for (int i = 0; i < 4; ++i) {
                                  std::vector<Rational> h{Rational(small(rng)), Rational(small(rng)), Rational(small(rng))};
                                  if (h[0].is_zero() && h[1].is_zero() && h[2].is_zero()) h[0] = 1;
                                  arr.emplace_back(std::span<const Rational>(h));
                              }
                              const ProjPoint p{small(rng), small(rng), small(rng) + 5};
                              const auto moved = change_coordinates(p, m);
                              std::vector<Hyperplane> moved_arr;
                              for (const auto& h : arr) moved_arr.push_back(transform_hyperplane(h, m));
                              const SContext big = s.united(moved.delta);
                              try {
                                  if (is_s_integral(p, arr, big) != is_s_integral(moved.point, moved_arr, big)) ++bad;
                                  ++total;
                              } catch (const PointOnDivisor&) {
                              }
                          }
                          return {bad == 0, std::to_string(bad) + " violations in " + std::to_string(total)};
                      }});
    return checks;
}

// ---------------------------------------------------------------- further constructions

std::vector<Check> construction_checks(std::uint64_t) {
    std::vector<Check> checks;
    const SContext s{2, 3};
    const auto pairs = [s] {
        std::vector<std::pair<Rational, Rational>> out;  // e1 + e2 = 1
        for (const auto& c : solve_unit_equation(1, s, 4)) {
            const auto& e = c.entries();
            out.emplace_back(-e[0] / e[2], -e[1] / e[2]);
        }
        return out;
    };
    checks.push_back({"(x : y : eps) avoids E = 0 and the root lines", "Thue-Mahler solutions as integral points",
                      [s]() -> Outcome {
                          const auto f = BinaryFormSpec::split({Rational(0), Rational(1), Rational(-1)});
                          std::vector<Hyperplane> arr{ProjPoint{0, 0, 1}};
                          for (const auto& a : f.roots()) {
                              const std::vector<Rational> h{Rational(1), -a, Rational(0)};
                              arr.emplace_back(std::span<const Rational>(h));
                          }
                          std::vector<Rational> extra{f.k()};
                          for (const auto& a : f.roots())
                              if (!a.is_zero()) extra.push_back(a);
                          const SContext big = extend_s(s, extra);
                          std::size_t ok = 0, total = 0;
                          for (const auto& sol : solve_thue_mahler(f, s, 40)) {
                              ++total;
                              const std::vector<Rational> raw{sol.x, sol.y, sol.eps};
                              if (is_s_integral(ProjPoint(std::span<const Rational>(raw)), arr, big)) ++ok;
                          }
                          return {total > 0 && ok == total, count_detail(ok, total) + " points integral"};
                      }});
    checks.push_back({"(1 : -e2 : -e1 h2) on P^2 minus four lines", "pairs of unit solutions", [s, pairs]() -> Outcome {
                          const auto ps = pairs();
                          const auto arr = standard_arrangement(2);
                          std::size_t ok = 0, total = 0;
                          for (const auto& [e1, e2] : ps)
                              for (const auto& [h1, h2] : ps) {
                                  ++total;
                                  const std::vector<Rational> raw{Rational(1), -e2, -e1 * h2};
                                  if (is_s_integral(ProjPoint(std::span<const Rational>(raw)), arr, s)) ++ok;
                              }
                          return {ok == total, count_detail(ok, total) + " points integral"};
                      }});
    checks.push_back({"projected quadric image avoids four lines", "geometric form of the same argument",
                      [s, pairs]() -> Outcome {
                          const auto ps = pairs();
                          const std::vector<Hyperplane> arr{ProjPoint{0, 1, 0}, ProjPoint{-1, 1, 0}, ProjPoint{0, 0, 1},
                                                            ProjPoint{-1, 0, 1}};
                          std::size_t ok = 0, total = 0;
                          for (const auto& [e, ignored] : ps)
                              for (const auto& [h, ignored2] : ps) {
                                  ++total;
                                  const std::vector<Rational> a{e, Rational(1)}, b{h, Rational(1)};
                                  const auto q = quadratic_embed(ProjPoint(std::span<const Rational>(a)),
                                                                 ProjPoint(std::span<const Rational>(b)));
                                  if (is_s_integral(project_from_last(q), arr, s)) ++ok;
                              }
                          return {ok == total, count_detail(ok, total) + " points integral"};
                      }});
    checks.push_back({"(1 : e : h) and (1 : e1 : e2) in the plane", "integral points of P^1 give points of P^2",
                      [s, pairs]() -> Outcome {
                          const auto ps = pairs();
                          const auto units = enumerate_s_units(s, 2);
                          const std::vector<Hyperplane> four{ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1},
                                                             ProjPoint{-1, 1, 0}};
                          const std::vector<Hyperplane> five{ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1},
                                                             ProjPoint{-1, 1, 0}, ProjPoint{-1, 0, 1}};
                          std::size_t ok = 0, total = 0;
                          for (const auto& [e, ignored] : ps) {
                              for (const auto& h : units) {
                                  ++total;
                                  const std::vector<Rational> raw{Rational(1), e, h};
                                  if (is_s_integral(ProjPoint(std::span<const Rational>(raw)), four, s)) ++ok;
                              }
                              for (const auto& [e2, ignored2] : ps) {
                                  ++total;
                                  const std::vector<Rational> raw{Rational(1), e, e2};
                                  if (is_s_integral(ProjPoint(std::span<const Rational>(raw)), five, s)) ++ok;
                              }
                          }
                          return {ok == total, count_detail(ok, total) + " points integral"};
                      }});
    checks.push_back({"padding integral points with units", "the statement in dimension n gives dimension n - t",
                      [s]() -> Outcome {
                          const auto cov = covering_hyperplanes(2, s, 2);
                          const auto arr = padded_arrangement(2, 2);
                          const auto units = enumerate_s_units(s, 1);
                          std::size_t ok = 0, total = 0;
                          for (const auto& p : cov.points)
                              for (std::size_t i = 0; i < units.size(); i += 3) {
                                  ++total;
                                  if (is_s_integral(pad_point(p, {units[i], units[(i + 5) % units.size()]}), arr, s)) ++ok;
                              }
                          return {total > 0 && ok == total, count_detail(ok, total) + " padded points integral"};
                      }});
    return checks;
}

}  // namespace

SuiteReport run_verification_suite(const std::string& name, double budget_seconds, std::uint64_t seed) {
    std::vector<Check> checks;
    if (name == "prop21")
        checks = approximation_checks(seed);
    else if (name == "prop51")
        checks = transport_checks(seed);
    else if (name == "prop61")
        checks = covering_checks(seed);
    else if (name == "potpourri")
        checks = construction_checks(seed);
    else
        throw std::invalid_argument("unknown suite: " + name);

    SuiteReport report;
    report.suite = name;
    report.seed = seed;
    report.budget_seconds = budget_seconds;
    const auto start = Clock::now();
    for (const auto& c : checks) {
        if (std::chrono::duration<double>(Clock::now() - start).count() > budget_seconds) {
            report.complete = false;
            break;
        }
        SuiteCheck out;
        out.name = c.name;
        out.topic = c.topic;
        const auto t0 = Clock::now();
        try {
            std::tie(out.passed, out.detail) = c.run();
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail = std::string("exception: ") + e.what();
        }
        out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        report.checks.push_back(std::move(out));
    }
    return report;
}

}  // namespace dioph
