#pragma once

// Dense exact linear algebra over Q.

#include "dioph/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dioph {

using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Row-major nested initialization; all rows must have equal length.
    explicit QMatrix(const std::vector<QVector>& rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector row(std::size_t r) const;
    std::vector<QVector> row_vectors() const;

    QMatrix transposed() const;
    QVector apply(std::span<const Rational> v) const;          // M * v
    QVector apply_left(std::span<const Rational> v) const;     // v^T * M
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

    Rational determinant() const;
    /// Throws std::domain_error when singular.
    QMatrix inverse() const;
    std::size_t rank() const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; nonzero rows only, with pivot columns.
struct Echelon {
    std::vector<QVector> rows;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(std::vector<QVector> rows, std::size_t cols);

/// Basis of { x : A x = 0 } for the given rows.
std::vector<QVector> nullspace(const std::vector<QVector>& rows, std::size_t cols);

/// Coefficients c with sum_i c_i * vectors[i] = target, if any (unique when vectors are independent).
std::optional<QVector> solve_combination(const std::vector<QVector>& vectors, const QVector& target);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace dioph
