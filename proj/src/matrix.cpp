#include "bv/matrix.hpp"

#include "bv/errors.hpp"

#include <string>

namespace bv {

Matrix::Matrix(std::size_t rows, std::size_t cols, const BigInt& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<BigInt>> tmp;
    for (const auto& r : rows) tmp.emplace_back(r.begin(), r.end());
    *this = from_rows(tmp);
}

Matrix Matrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
        if (r.size() != m.cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix rows have different lengths");
        m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector Matrix::row_sums() const {
    IntVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c);
    return out;
}

IntVector Matrix::col_sums() const {
    IntVector out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[c] += (*this)(r, c);
    return out;
}

bool Matrix::all_positive() const {
    for (const auto& x : data_)
        if (x <= 0) return false;
    return !data_.empty();
}

std::vector<std::vector<BigInt>> Matrix::to_rows() const {
    std::vector<std::vector<BigInt>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntVector operator*(const Matrix& a, const IntVector& v) {
    if (a.cols() != v.size())
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match matrix columns");
    IntVector out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

IncidenceMatrix::IncidenceMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.cols() == 0)
        throw Error(ErrorCode::InvalidInput, "incidence matrix must be nonempty");
    for (std::size_t r = 0; r < m_.rows(); ++r)
        for (std::size_t c = 0; c < m_.cols(); ++c)
            if (m_(r, c) < 0) throw Error(ErrorCode::InvalidInput, "negative incidence entry");
    auto rs = m_.row_sums();
    for (std::size_t r = 0; r < rs.size(); ++r)
        if (rs[r] == 0) throw Error(ErrorCode::ZeroRow, "row " + std::to_string(r) + " has no edges");
    auto cs = m_.col_sums();
    for (std::size_t c = 0; c < cs.size(); ++c)
        if (cs[c] == 0)
            throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(c) + " has no edges");
}

}  // namespace bv
