#include "dioph/linalg.hpp"

#include <stdexcept>

namespace dioph {

QMatrix::QMatrix(const std::vector<QVector>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVector QMatrix::row(std::size_t r) const {
    return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<QVector> QMatrix::row_vectors() const {
    std::vector<QVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QVector QMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

QVector QMatrix::apply_left(std::span<const Rational> v) const {
    if (v.size() != rows_) throw std::invalid_argument("dimension mismatch");
    QVector out(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[c] += v[r] * (*this)(r, c);
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
    QMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Rational QMatrix::determinant() const {
    if (!square()) throw std::invalid_argument("determinant of non-square matrix");
    QMatrix m = *this;
    Rational det = 1;
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

QMatrix QMatrix::inverse() const {
    if (!square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    std::vector<QVector> aug(n, QVector(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = (*this)(r, c);
        aug[r][n + r] = 1;
    }
    Echelon e = row_reduce(std::move(aug), 2 * n);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rows[r][n + c];
    return inv;
}

std::size_t QMatrix::rank() const { return row_reduce(row_vectors(), cols_).pivots.size(); }

Echelon row_reduce(std::vector<QVector> rows, std::size_t cols) {
    Echelon e;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        std::size_t p = lead;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[lead]);
        const Rational inv = rows[lead][c].inverse();
        for (auto& x : rows[lead]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c].is_zero()) continue;
            const Rational f = rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[lead][j];
        }
        e.pivots.push_back(c);
        ++lead;
    }
    rows.resize(lead);
    e.rows = std::move(rows);
    return e;
}

std::vector<QVector> nullspace(const std::vector<QVector>& rows, std::size_t cols) {
    const Echelon e = row_reduce(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve_combination(const std::vector<QVector>& vectors, const QVector& target) {
    const std::size_t k = vectors.size();
    const std::size_t dim = target.size();
    // Columns are the vectors, augmented with the target.
    std::vector<QVector> rows(dim, QVector(k + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (vectors[j].size() != dim) throw std::invalid_argument("dimension mismatch");
            rows[i][j] = vectors[j][i];
        }
        rows[i][k] = target[i];
    }
    const Echelon e = row_reduce(std::move(rows), k + 1);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    QVector coeffs(k);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) coeffs[e.pivots[i]] = e.rows[i][k];
    return coeffs;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace dioph
