// dioph: command line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "dioph/approx.hpp"
#include "dioph/curves.hpp"
#include "dioph/hyperarr.hpp"
#include "dioph/serialize.hpp"
#include "dioph/specparse.hpp"
#include "dioph/suite.hpp"
#include "dioph/thuemahler.hpp"
#include "dioph/unitsolve.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>

using namespace dioph;

namespace {

enum class Format { Text, Json, Tsv };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Result {
    Json json;
    bool ok = true;
};

SContext primes_from(const std::string& text) {
    if (text.empty()) return {};
    std::vector<Integer> out;
    for (const auto& q : parse_rational_list(text)) {
        if (!q.is_integer()) throw UsageError("primes must be integers");
        out.push_back(q.num());
    }
    return SContext(std::move(out));
}

std::vector<Integer> integers_from(const std::string& text) {
    std::vector<Integer> out;
    for (const auto& q : parse_rational_list(text)) {
        if (!q.is_integer()) throw UsageError("expected integers: " + text);
        out.push_back(q.num());
    }
    return out;
}

Integer integer_from(const std::string& text) {
    const auto v = integers_from(text);
    if (v.size() != 1) throw UsageError("expected one integer: " + text);
    return v[0];
}

std::vector<Hyperplane> hyperplanes_from(const std::string& text) {
    std::vector<Hyperplane> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(';', start), text.size());
        const auto coeffs = parse_rational_list(std::string_view(text).substr(start, end - start), start);
        out.emplace_back(std::span<const Rational>(coeffs));
        start = end + 1;
    }
    return out;
}

std::size_t default_cap() {
    if (const char* env = std::getenv("DIOPH_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("DIOPH_CAP is not a number: ") + env);
        }
    }
    return kDefaultEnumerationCap;
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string out;
        for (const auto& e : j) out += (out.empty() ? "" : " ") + scalar_text(e);
        return "(" + out + ")";
    }
    return j.dump();
}

bool flat(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& e : j)
        if (!flat(e)) return false;
    return true;
}

void render_text(std::ostream& os, const Json& j, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (flat(value) && !(value.is_array() && !value.empty() && value[0].is_array())) {
                os << pad << key << ": " << scalar_text(value) << '\n';
            } else {
                os << pad << key << ":\n";
                render_text(os, value, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (flat(e)) {
                os << pad << scalar_text(e) << '\n';
            } else {
                os << pad << "-\n";
                render_text(os, e, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

// Scalars as "# key<TAB>value" lines, then the "items" array one row per element.
void render_tsv(std::ostream& os, const Json& j) {
    const auto cell = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string out;
            for (const auto& e : v) out += (out.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
            return out;
        }
        return v.dump();
    };
    for (const auto& [key, value] : j.items())
        if (key != "items" && flat(value)) os << "# " << key << '\t' << cell(value) << '\n';
    if (!j.contains("items")) return;
    const Json& items = j["items"];
    if (!items.empty() && items[0].is_object()) {
        bool first = true;
        for (const auto& [key, value] : items[0].items()) {
            os << (first ? "" : "\t") << key;
            first = false;
        }
        os << '\n';
    }
    for (const auto& row : items) {
        if (row.is_object()) {
            bool first = true;
            for (const auto& [key, value] : row.items()) {
                os << (first ? "" : "\t") << cell(value);
                first = false;
            }
        } else if (row.is_array()) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << cell(row[i]);
        } else {
            os << cell(row);
        }
        os << '\n';
    }
}

// ---------------------------------------------------------------- form options

struct FormOptions {
    std::string spec, roots, cofactor = "1", k = "1", form;

    void add(CLI::App* cmd) {
        cmd->add_option("--spec", spec, "equation spec, e.g. \"roots=0,1,-1;k=1;H=1\"");
        cmd->add_option("--roots", roots, "three distinct rational roots a1,a2,a3");
        cmd->add_option("--cofactor", cofactor, "cofactor H coefficients, highest degree first")->capture_default_str();
        cmd->add_option("--k", k, "right-hand side constant")->capture_default_str();
        cmd->add_option("--form", form, "named form: xy(x-y)");
    }

    BinaryFormSpec build() const {
        if (!spec.empty()) {
            auto parsed = parse_equation_spec(spec);
            if (const auto* f = std::get_if<BinaryFormSpec>(&parsed)) return *f;
            throw UsageError("--spec does not describe a binary form");
        }
        std::string text;
        if (!form.empty())
            text = "form=" + form + ";k=" + k;
        else if (!roots.empty())
            text = "roots=" + roots + ";k=" + k + ";H=" + cofactor;
        else
            throw UsageError("one of --spec, --roots or --form is required");
        return std::get<BinaryFormSpec>(parse_equation_spec(text));
    }
};

// ---------------------------------------------------------------- commands

Result cmd_solve_unit(std::size_t n, const std::string& primes, unsigned bound, std::size_t cap, bool degenerate) {
    const SContext s = primes_from(primes);
    Json items = Json::array();
    for (const auto& c : solve_unit_equation(n, s, bound, cap)) items.push_back(to_json(c.entries()));
    Json out{{"n", n}, {"primes", to_json(s)}, {"bound", bound}, {"count", items.size()}, {"items", items}};
    if (degenerate) {
        Json deg = Json::array();
        for (const auto& t : degenerate_unit_solutions(n, s, bound, cap)) deg.push_back(to_json(t));
        out["degenerate"] = deg;
    }
    return {out};
}

Result cmd_solve_tm(const FormOptions& fo, const std::string& primes, unsigned long height, std::size_t cap) {
    const auto f = fo.build();
    const SContext s = primes_from(primes);
    Json items = Json::array();
    for (const auto& sol : solve_thue_mahler(f, s, height, cap)) items.push_back(to_json(sol));
    return {Json{{"form", to_json(f)}, {"primes", to_json(s)}, {"height", height}, {"count", items.size()}, {"items", items}}};
}

Result cmd_transport(const FormOptions& fo, const std::string& primes, unsigned long height, const std::string& shear,
                     std::size_t cap) {
    const auto f = fo.build();
    const SContext s = primes_from(primes);
    const auto sols = solve_thue_mahler(f, s, height, cap);
    if (!shear.empty()) {
        const auto dir = shear == "i-ii" ? ShearDirection::IToII : ShearDirection::IIToI;
        return {to_json(shear_transform(f, dir, sols, s))};
    }
    if (f.kind() != FormKind::Split) throw UsageError("unit transport needs a split form given by its roots");
    Json items = Json::array();
    bool ok = true;
    for (const auto& sol : sols) {
        Json row{{"point", to_json(sol.point)}};
        if (sol.x == f.roots()[0] * sol.y) {
            row["gamma"] = nullptr;
            row["round_trip"] = "skipped: x = a1 y";
        } else {
            const auto img = transport_thue_to_unit(f, sol, s);
            const bool back = transport_unit_to_thue(f, img.gamma, img.beta[0]) == sol;
            ok = ok && back;
            row["beta"] = to_json(std::vector<Rational>(img.beta.begin(), img.beta.end()));
            row["gamma"] = to_json(img.gamma);
            row["round_trip"] = back;
        }
        items.push_back(row);
    }
    return {Json{{"form", to_json(f)}, {"context", to_json(transport_context(f, s))}, {"count", items.size()},
                 {"items", items}},
            ok};
}

Result cmd_verify_approx(const std::string& poly, const std::string& k, const std::string& x, const std::string& y,
                         mpfr_prec_t prec, const std::string& kappa, const std::string& pq) {
    const auto coeffs = integers_from(poly);
    if (!kappa.empty() || !pq.empty()) {
        if (kappa.empty() || pq.empty()) throw UsageError("--kappa and --pq go together");
        const auto rep = forward_bound(coeffs, parse_rational_list(kappa).at(0), parse_rational_list(pq).at(0), prec);
        return {to_json(rep), rep.within == Decision::True};
    }
    const auto rep = verify_inequality(coeffs, integer_from(k), integer_from(x), integer_from(y), prec);
    Json out = to_json(rep);
    Json kap = Json::array();
    for (const auto& kb : kappa_backward(coeffs, integer_from(k), prec)) kap.push_back(to_json(kb.kappa));
    out["kappa_all_roots"] = kap;
    return {out, rep.holds == Decision::True};
}

Result cmd_check_integral(const std::string& point, const std::string& arrangement, std::size_t standard,
                          const std::string& primes, unsigned long local_bound) {
    const auto coords = parse_rational_list(point);
    const ProjPoint p{std::span<const Rational>(coords)};
    std::vector<Hyperplane> arr;
    if (!arrangement.empty())
        arr = hyperplanes_from(arrangement);
    else if (standard > 0)
        arr = standard_arrangement(standard);
    else
        throw UsageError("one of --arrangement or --standard is required");
    for (const auto& h : arr)
        if (h.size() != p.size()) throw UsageError("hyperplane and point dimensions differ");
    const SContext s = primes_from(primes);
    Json values = Json::array();
    for (const auto& h : arr) values.push_back(evaluate(h, p).get_str());
    Json out{{"point", to_json(p)}, {"primes", to_json(s)}, {"values", values}};
    try {
        out["integral"] = is_s_integral(p, arr, s);
        if (local_bound > 0) out["integral_local"] = is_s_integral_local(p, arr, s, local_bound);
    } catch (const PointOnDivisor&) {
        out["integral"] = "on divisor";
    }
    return {out};
}

Result cmd_cover(std::size_t n, const std::string& arrangement, const std::string& primes, unsigned bound,
                 long height, std::size_t cap) {
    const SContext s = primes_from(primes);
    if (!arrangement.empty()) {
        const LinearFormSystem sys(hyperplanes_from(arrangement));
        const auto cov = cover_arrangement(sys, s, bound, cap);
        Json out = to_json(cov);
        if (height > 0) {
            const auto pts = s_integral_points(sys.forms(), s, height, cap);
            out["checked_points"] = pts.size();
            out["covered"] = verify_covering(pts, cov.hyperplanes);
            return {out, out["covered"].get<bool>()};
        }
        return {out};
    }
    if (n == 0) throw UsageError("one of --n or --arrangement is required");
    const auto cov = covering_hyperplanes(n, s, bound, cap);
    Json out = to_json(cov);
    Json items = Json::array();
    for (const auto& h : cov.hyperplanes()) items.push_back(to_json(h));
    out["items"] = items;
    return {out};
}

Result cmd_curve(const std::string& spec_text, const std::string& family, const std::string& k, const std::string& f,
                 unsigned m, const std::string& roots, const std::string& a1, const std::string& a2,
                 const std::string& primes, long box, std::size_t cap) {
    std::string text = spec_text;
    if (text.empty()) {
        if (family.empty()) throw UsageError("one of --spec or --family is required");
        text = "family=" + family;
        if (!k.empty()) text += ";k=" + k;
        if (!f.empty()) text += ";f=" + f;
        if (m) text += ";m=" + std::to_string(m);
        if (!roots.empty()) text += ";roots=" + roots;
        if (!a1.empty()) text += ";a1=" + a1;
        if (!a2.empty()) text += ";a2=" + a2;
        if (!primes.empty()) text += ";primes=" + primes;
    }
    auto parsed = parse_equation_spec(text);
    const auto* spec = std::get_if<CurveSpec>(&parsed);
    if (!spec) throw UsageError("not a curve spec: " + text);
    Json items = Json::array();
    for (const auto& p : enumerate_points(*spec, box, cap)) items.push_back(to_json(p));
    return {Json{{"spec", format_equation_spec(parsed)}, {"box", box}, {"count", items.size()}, {"items", items}}};
}

Result cmd_suite(const std::string& name, double budget, std::uint64_t seed) {
    const auto rep = run_verification_suite(name, budget, seed);
    Json items = Json::array();
    for (const auto& c : rep.checks)
        items.push_back(Json{{"check", c.name}, {"topic", c.topic}, {"passed", c.passed}, {"detail", c.detail},
                             {"seconds", c.seconds}});
    return {Json{{"suite", rep.suite}, {"seed", rep.seed}, {"budget_seconds", rep.budget_seconds},
                 {"complete", rep.complete}, {"passed", rep.passed()}, {"items", items}},
            rep.passed()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded searches and verifications for S-unit, Thue-Mahler and hyperplane problems"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool json = false, tsv = false;
    std::size_t cap = 0;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--json", json, "JSON output");
    app.add_flag("--tsv", tsv, "tab-separated output");
    app.add_option("--cap", cap, "enumeration cap (default: $DIOPH_CAP or 10000000)");
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

    std::string primes, arrangement, point, poly, k = "1", x, y, kappa, pq, shear, suite_name, spec, family, f, roots, a1,
                                                a2, kcurve;
    std::size_t n = 1, standard = 0;
    unsigned bound = 4, m = 0;
    unsigned long height = 100, local_bound = 0;
    long box = 100, check_height = 0;
    mpfr_prec_t prec = 64;
    double budget = 120;
    bool degenerate = false;
    FormOptions fo_tm, fo_tr;

    auto* su = app.add_subcommand("solve-unit", "non-degenerate classes of e_0 + ... + e_{n+1} = 0");
    su->add_option("--n", n, "n (tuples have n + 2 terms)")->capture_default_str();
    su->add_option("--primes", primes, "S, e.g. 2,3");
    su->add_option("--bound", bound, "exponent bound")->capture_default_str();
    su->add_flag("--degenerate", degenerate, "also list degenerate tuples");

    auto* tm = app.add_subcommand("solve-tm", "classes of F(x, y) = k * S-unit");
    fo_tm.add(tm);
    tm->add_option("--primes", primes, "S");
    tm->add_option("--height", height, "max(|x|, |y|) bound")->capture_default_str();

    auto* tr = app.add_subcommand("transport", "carry Thue-Mahler classes to unit equations or to XY(X-Y)");
    fo_tr.add(tr);
    tr->add_option("--primes", primes, "S");
    tr->add_option("--height", height, "search height")->capture_default_str();
    tr->add_option("--shear", shear, "shear onto XY(X-Y) instead: i-ii or ii-i")
        ->check(CLI::IsMember({"i-ii", "ii-i"}));

    auto* va = app.add_subcommand("verify-approx", "check |alpha - x/y| <= kappa / |y|^d with interval arithmetic");
    va->add_option("--poly", poly, "coefficients of f(X, 1), highest degree first")->required();
    va->add_option("--k", k, "F(x, y) = k")->capture_default_str();
    va->add_option("--x", x, "x");
    va->add_option("--y", y, "y");
    va->add_option("--prec", prec, "starting precision in bits")->capture_default_str();
    va->add_option("--kappa", kappa, "forward direction: kappa");
    va->add_option("--pq", pq, "forward direction: approximant p/q");

    auto* ci = app.add_subcommand("check-integral", "S-integrality of a point of a hyperplane complement");
    ci->add_option("--point", point, "coordinates")->required();
    ci->add_option("--arrangement", arrangement, "hyperplanes, e.g. \"1,0;0,1;1,-1\"");
    ci->add_option("--standard", standard, "use X_0, ..., X_n, X_0 + ... + X_n in P^n");
    ci->add_option("--primes", primes, "S");
    ci->add_option("--local-bound", local_bound, "also run the local test over primes up to this bound");

    auto* cv = app.add_subcommand("cover", "hyperplanes covering the S-integral points of a complement");
    cv->add_option("--n", n, "P^n minus the standard arrangement")->capture_default_str();
    cv->add_option("--arrangement", arrangement, "n + 2 hyperplanes of P^n instead of the standard ones");
    cv->add_option("--primes", primes, "S");
    cv->add_option("--bound", bound, "exponent bound")->capture_default_str();
    cv->add_option("--height", check_height, "with --arrangement: check the cover on points of this height");

    auto* cu = app.add_subcommand("curve", "integer points on classical curves in a box");
    cu->add_option("--spec", spec, "curve spec, e.g. \"family=mordell;k=-2\"");
    cu->add_option("--family", family, "mordell, elliptic, hyperelliptic, superelliptic, thue, siegel");
    cu->add_option("--k", kcurve, "constant");
    cu->add_option("--f", f, "integer coefficients, highest degree first");
    cu->add_option("--m", m, "superelliptic exponent");
    cu->add_option("--roots", roots, "Thue roots");
    cu->add_option("--a1", a1, "Siegel a1");
    cu->add_option("--a2", a2, "Siegel a2");
    cu->add_option("--primes", primes, "Siegel S");
    cu->add_option("--box", box, "coordinate or exponent bound")->capture_default_str();

    auto* st = app.add_subcommand("suite", "run a verification suite");
    st->add_option("name", suite_name, "prop21, prop51, prop61 or potpourri")->required();
    st->add_option("--budget", budget, "time budget in seconds")->capture_default_str();
    st->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = json ? Format::Json : tsv ? Format::Tsv : Format::Text;
    Result result;
    try {
        if (json && tsv) throw UsageError("--json and --tsv are exclusive");
        if (cap == 0) cap = default_cap();
        if (*su)
            result = cmd_solve_unit(n, primes, bound, cap, degenerate);
        else if (*tm)
            result = cmd_solve_tm(fo_tm, primes, height, cap);
        else if (*tr)
            result = cmd_transport(fo_tr, primes, height, shear, cap);
        else if (*va)
            result = cmd_verify_approx(poly, k, x, y, prec, kappa, pq);
        else if (*ci)
            result = cmd_check_integral(point, arrangement, standard, primes, local_bound);
        else if (*cv)
            result = cmd_cover(*cv->get_option("--n") ? n : 0, arrangement, primes, bound, check_height, cap);
        else if (*cu)
            result = cmd_curve(spec, family, kcurve, f, m, roots, a1, a2, primes, box, cap);
        else if (*st)
            result = cmd_suite(suite_name, budget, seed);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    switch (format) {
        case Format::Json: std::cout << result.json.dump(2) << '\n'; break;
        case Format::Tsv: render_tsv(std::cout, result.json); break;
        case Format::Text: render_text(std::cout, result.json, 0); break;
    }
    return result.ok ? 0 : 1;
}
