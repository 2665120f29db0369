#pragma once

#include "bv/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bv {

/// Dense row-major integer matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const BigInt& fill = 0);
    Matrix(std::initializer_list<std::initializer_list<long long>> rows);

    /// Rows must be rectangular; throws Error(DimensionMismatch) otherwise.
    static Matrix from_rows(const std::vector<std::vector<BigInt>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    IntVector row_sums() const;
    IntVector col_sums() const;
    bool all_positive() const;
    std::vector<std::vector<BigInt>> to_rows() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
IntVector operator*(const Matrix& a, const IntVector& v);

/// Nonnegative matrix with no zero row and no zero column: rows index V_n,
/// columns index V_{n-1}, entry (i,j) is the number of edges j -> i.
class IncidenceMatrix {
public:
    /// Throws ZeroRow / ZeroColumn / InvalidInput (negative entry or empty).
    explicit IncidenceMatrix(Matrix m);
    IncidenceMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : IncidenceMatrix(Matrix(rows)) {}

    const Matrix& matrix() const noexcept { return m_; }
    std::size_t rows() const noexcept { return m_.rows(); }
    std::size_t cols() const noexcept { return m_.cols(); }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    Matrix m_;
};

}  // namespace bv
