#include "dioph/hyperarr.hpp"

#include "dioph/detail/odometer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dioph {

LinearFormSystem::LinearFormSystem(std::vector<Hyperplane> forms) : forms_(std::move(forms)) {
    if (forms_.size() < 3) throw std::invalid_argument("need n+2 forms with n >= 1");
    const std::size_t vars = forms_.front().size();
    if (forms_.size() != vars + 1) throw std::invalid_argument("need exactly n+2 forms in n+1 variables");
    for (const auto& f : forms_)
        if (f.size() != vars) throw std::invalid_argument("forms have different numbers of variables");
    for (std::size_t i = 0; i < forms_.size(); ++i)
        for (std::size_t j = i + 1; j < forms_.size(); ++j)
            if (forms_[i] == forms_[j]) throw std::invalid_argument("forms " + std::to_string(i) + " and " +
                                                                    std::to_string(j) + " define the same hyperplane");
}

namespace {

std::size_t rank_of(const std::vector<QVector>& rows, std::size_t cols) {
    return row_reduce(rows, cols).rows.size();
}

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order until it returns true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

QVector scaled(const QVector& v, const Rational& c) {
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

QVector added(const QVector& a, const QVector& b) {
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Hyperplane indicator(std::size_t len, const std::vector<std::size_t>& support) {
    IVector v(len, 0);
    for (std::size_t j : support) v[j] = 1;
    return Hyperplane(v);
}

}  // namespace

Reordering rank_and_reorder(const LinearFormSystem& sys) {
    const auto& forms = sys.forms();
    const std::size_t count = forms.size();
    const std::size_t cols = sys.dimension() + 1;
    std::vector<QVector> vec;
    for (const auto& f : forms) vec.push_back(f.rationals());
    const auto pick = [&](const std::vector<std::size_t>& idx) {
        std::vector<QVector> rows;
        for (std::size_t i : idx) rows.push_back(vec[i]);
        return rows;
    };

    std::vector<std::size_t> circuit;
    for (std::size_t k = 2; k <= count && circuit.empty(); ++k) {
        for_each_subset(count, k, [&](const std::vector<std::size_t>& idx) {
            if (rank_of(pick(idx), cols) != k - 1) return false;
            for (std::size_t drop = 0; drop < k; ++drop) {
                std::vector<std::size_t> rest = idx;
                rest.erase(rest.begin() + static_cast<long>(drop));
                if (rank_of(pick(rest), cols) != k - 1) return false;
            }
            circuit = idx;
            return true;
        });
    }
    if (circuit.empty()) throw std::logic_error("n+2 forms in n+1 variables must be dependent");

    const std::size_t dependent = circuit.back();
    std::vector<std::size_t> head(circuit.begin(), circuit.end() - 1);
    const auto coeffs = solve_combination(pick(head), vec[dependent]);
    if (!coeffs) throw std::logic_error("circuit without a dependency");

    Reordering out;
    out.coefficients = *coeffs;
    out.permutation = head;
    const std::size_t total = rank_of(vec, cols);
    for (std::size_t i = 0; i < count && out.permutation.size() < total; ++i) {
        if (i == dependent || std::find(head.begin(), head.end(), i) != head.end()) continue;
        std::vector<std::size_t> trial = out.permutation;
        trial.push_back(i);
        if (rank_of(pick(trial), cols) == trial.size()) out.permutation = trial;
    }
    out.r = total - 1;
    out.permutation.push_back(dependent);
    for (std::size_t i = 0; i < count; ++i)
        if (std::find(out.permutation.begin(), out.permutation.end(), i) == out.permutation.end())
            out.permutation.push_back(i);
    return out;
}

SubspaceModel::SubspaceModel(QMatrix rows) : basis(std::move(rows)) {
    if (basis.rows() == 0) throw std::invalid_argument("subspace needs at least one spanning vector");
    if (basis.rank() != basis.rows()) throw std::invalid_argument("spanning vectors are dependent");
}

bool SubspaceModel::contains(const ProjPoint& p) const {
    if (p.size() != basis.cols()) return false;
    auto rows = basis.row_vectors();
    rows.push_back(p.rationals());
    return rank_of(rows, basis.cols()) == basis.rows();
}

TraceReport distinct_traces(const SubspaceModel& l, const std::optional<ProjPoint>& witness) {
    const std::size_t n = l.ambient();
    const std::size_t k = l.basis.rows();
    for (std::size_t r = 0; r < k; ++r) {
        Rational sum;
        for (std::size_t c = 0; c <= n; ++c) sum += l.basis(r, c);
        if (!sum.is_zero()) throw std::invalid_argument("subspace is not inside X_0 + ... + X_n = 0");
    }
    TraceReport rep{0, {}, false, l.s() + 2};
    std::set<std::vector<QVector>> seen;
    for (std::size_t i = 0; i <= n; ++i) {
        QVector column(k);
        bool all_zero = true;
        for (std::size_t r = 0; r < k; ++r) {
            column[r] = l.basis(r, i);
            if (!column[r].is_zero()) all_zero = false;
        }
        if (all_zero) throw std::invalid_argument("subspace lies in X_" + std::to_string(i) + " = 0");
        const auto lambdas = nullspace({column}, k);
        if (lambdas.empty()) continue;
        std::vector<QVector> vectors;
        for (const auto& lam : lambdas) {
            QVector v(n + 1);
            for (std::size_t r = 0; r < k; ++r) v = added(v, scaled(l.basis.row(r), lam[r]));
            vectors.push_back(std::move(v));
        }
        const Echelon e = row_reduce(vectors, n + 1);
        if (seen.insert(e.rows).second) rep.traces.emplace_back(e.rows);
    }
    rep.count = rep.traces.size();
    if (witness && l.contains(*witness)) {
        const QVector w = witness->rationals();
        const bool nonzero = std::none_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
        rep.hypothesis = nonzero && is_nondegenerate(w, 1);
    }
    return rep;
}

std::vector<Hyperplane> Covering::hyperplanes() const {
    std::vector<Hyperplane> out = subsum_hyperplanes;
    out.insert(out.end(), point_hyperplanes.begin(), point_hyperplanes.end());
    return out;
}

std::vector<Rational> point_to_tuple(const ProjPoint& p) {
    std::vector<Rational> t = p.rationals();
    Rational sum;
    for (const auto& x : t) sum += x;
    t.push_back(-sum);
    return t;
}

ProjPoint tuple_to_point(const std::vector<Rational>& t) {
    if (t.size() < 3) throw std::invalid_argument("tuple too short for a point");
    Rational sum;
    for (const auto& x : t) sum += x;
    if (!sum.is_zero()) throw std::invalid_argument("tuple does not sum to zero");
    return ProjPoint(std::span<const Rational>(t.data(), t.size() - 1));
}

bool verify_covering(const std::vector<ProjPoint>& points, const std::vector<Hyperplane>& hyperplanes) {
    return std::all_of(points.begin(), points.end(), [&](const ProjPoint& p) {
        return std::any_of(hyperplanes.begin(), hyperplanes.end(), [&](const Hyperplane& h) {
            return h.size() == p.size() && evaluate(h, p) == 0;
        });
    });
}

Covering covering_hyperplanes(std::size_t n, const SContext& s, unsigned bound, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const std::vector<Rational> units = enumerate_s_units(s, bound, cap);
    Covering cov;
    std::set<Hyperplane> through;
    std::vector<long> idx(n, 0);
    std::size_t scanned = 0;
    std::vector<Rational> coords(n + 1);
    coords[0] = 1;
    do {
        if (++scanned > cap) throw CapExceeded(cap, cov.points.size());
        Rational sum = 1;
        for (std::size_t i = 0; i < n; ++i) {
            coords[i + 1] = units[static_cast<std::size_t>(idx[i])];
            sum += coords[i + 1];
        }
        if (!in_unit_box(sum, s, bound)) continue;
        ProjPoint p{std::span<const Rational>(coords)};
        std::vector<Rational> tuple = coords;
        tuple.push_back(-sum);
        if (is_nondegenerate(tuple)) {
            IVector h(n + 1, 0);
            h[0] = p[1];
            h[1] = -p[0];
            through.insert(Hyperplane(h));
            cov.nondegenerate.push_back(p);
        } else {
            cov.degenerate.push_back(p);
        }
        cov.points.push_back(std::move(p));
    } while (detail::advance(idx, 0, static_cast<long>(units.size()) - 1));

    for (std::size_t k = 2; k <= n; ++k)
        for_each_subset(n + 1, k, [&](const std::vector<std::size_t>& j) {
            cov.subsum_hyperplanes.push_back(indicator(n + 1, j));
            return false;
        });
    cov.point_hyperplanes.assign(through.begin(), through.end());
    for (auto* list : {&cov.points, &cov.nondegenerate, &cov.degenerate}) std::sort(list->begin(), list->end());
    if (!verify_covering(cov.degenerate, cov.subsum_hyperplanes) ||
        !verify_covering(cov.nondegenerate, cov.point_hyperplanes))
        throw std::logic_error("hyperplane cover misses an enumerated point");
    return cov;
}

ArrangementCover cover_arrangement(const LinearFormSystem& sys, const SContext& s, unsigned bound, std::size_t cap) {
    ArrangementCover out{rank_and_reorder(sys), {}, {}, {}};
    const auto& ro = out.reordering;
    const std::size_t m = ro.m();
    std::vector<QVector> y;
    for (std::size_t i = 0; i <= m; ++i)
        y.push_back(scaled(sys.forms()[ro.permutation[i]].rationals(), ro.coefficients[i]));
    y.push_back(scaled(sys.forms()[ro.permutation[ro.r + 1]].rationals(), Rational(-1)));
    out.extended = extend_s(s, ro.coefficients);
    out.classes = solve_unit_equation(m, out.extended, bound, cap);

    std::set<Hyperplane> hs;
    for (const auto& c : out.classes) {
        const QVector h = added(scaled(y[0], c.entries()[1]), scaled(y[1], Rational(-1)));
        hs.insert(Hyperplane(std::span<const Rational>(h)));
    }
    for (std::size_t k = 2; k <= m; ++k)
        for_each_subset(m + 2, k, [&](const std::vector<std::size_t>& idx) {
            QVector h(y[0].size());
            for (std::size_t i : idx) h = added(h, y[i]);
            hs.insert(Hyperplane(std::span<const Rational>(h)));
            return false;
        });
    out.hyperplanes.assign(hs.begin(), hs.end());
    return out;
}

std::vector<ProjPoint> s_integral_points(const std::vector<Hyperplane>& arrangement, const SContext& s, long height,
                                         std::size_t cap) {
    if (arrangement.empty()) throw std::invalid_argument("empty arrangement");
    if (height < 1) throw std::invalid_argument("height must be at least 1");
    const std::size_t len = arrangement.front().size();
    std::vector<ProjPoint> out;
    std::vector<long> c(len, -height);
    std::size_t scanned = 0;
    do {
        const auto first = std::find_if(c.begin(), c.end(), [](long v) { return v != 0; });
        if (first == c.end() || *first < 0) continue;
        Integer g = 0;
        for (long v : c) mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
        if (g != 1) continue;
        if (++scanned > cap) throw CapExceeded(cap, out.size());
        const ProjPoint p(IVector(c.begin(), c.end()));
        bool ok = true;
        for (const auto& h : arrangement) {
            const Integer v = evaluate(h, p);
            if (v == 0 || !is_s_unit(Rational(v), s)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(p);
    } while (detail::advance(c, -height, height));
    std::sort(out.begin(), out.end());
    return out;
}

ProjPoint pad_point(const ProjPoint& p, const std::vector<Rational>& etas) {
    std::vector<Rational> coords = p.rationals();
    coords.insert(coords.end(), etas.begin(), etas.end());
    return ProjPoint(std::span<const Rational>(coords));
}

std::vector<Hyperplane> padded_arrangement(std::size_t k, std::size_t r) {
    std::vector<Hyperplane> out;
    const std::size_t len = k + r + 1;
    for (std::size_t i = 0; i < len; ++i) out.push_back(indicator(len, {i}));
    std::vector<std::size_t> head(k + 1);
    for (std::size_t i = 0; i <= k; ++i) head[i] = i;
    out.push_back(indicator(len, head));
    return out;
}

}  // namespace dioph
