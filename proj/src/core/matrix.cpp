#include "core/matrix.hpp"

#include <utility>

#include "core/error.hpp"

namespace wfa {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> grid) {
    rows_ = grid.size();
    cols_ = rows_ == 0 ? 0 : grid.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : grid) {
        if (row.size() != cols_)
            throw Error(ErrorCode::Dimension, "ragged matrix literal");
        for (const auto& x : row)
            entries_.push_back(x);
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++)
        m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != cols)
            throw Error(ErrorCode::Dimension, "row length mismatch");
        for (size_t j = 0; j < cols; j++)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); j++) {
        if (cols[j].size() != rows)
            throw Error(ErrorCode::Dimension, "column length mismatch");
        for (size_t i = 0; i < rows; i++)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::row(const Vec& v) {
    return from_rows({v}, v.size());
}

Matrix Matrix::col(const Vec& v) {
    return from_cols({v}, v.size());
}

Vec Matrix::row_vec(size_t r) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; j++)
        v[j] = at(r, j);
    return v;
}

Vec Matrix::col_vec(size_t c) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; i++)
        v[i] = at(i, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; i++)
        for (size_t j = 0; j < cols_; j++)
            t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorCode::Dimension, "matrix product dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++)
        for (size_t k = 0; k < a.cols(); k++) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (size_t j = 0; j < b.cols(); j++)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    return mat_mul(a, b);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::Dimension, "matrix sum dimension mismatch");
    Matrix c(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++)
        for (size_t j = 0; j < a.cols(); j++)
            c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ia = 0; ia < a.rows(); ia++)
        for (size_t ja = 0; ja < a.cols(); ja++) {
            const Rational& x = a.at(ia, ja);
            if (x.is_zero())
                continue;
            for (size_t ib = 0; ib < b.rows(); ib++)
                for (size_t jb = 0; jb < b.cols(); jb++)
                    k.at(ia * b.rows() + ib, ja * b.cols() + jb) = x * b.at(ib, jb);
        }
    return k;
}

namespace {

// Gauss-Jordan on [a | b], first-nonzero pivot, fully reduced.
// Returns pivot columns of the a-part.
std::vector<size_t> reduce_augmented(Matrix& a, Matrix& b) {
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t col = 0; col < a.cols() && next_row < a.rows(); col++) {
        size_t pivot_row = next_row;
        while (pivot_row < a.rows() && a.at(pivot_row, col).is_zero())
            pivot_row++;
        if (pivot_row == a.rows())
            continue;
        if (pivot_row != next_row) {
            for (size_t j = 0; j < a.cols(); j++)
                std::swap(a.at(pivot_row, j), a.at(next_row, j));
            for (size_t j = 0; j < b.cols(); j++)
                std::swap(b.at(pivot_row, j), b.at(next_row, j));
        }
        Rational inv = Rational(1) / a.at(next_row, col);
        for (size_t j = col; j < a.cols(); j++)
            a.at(next_row, j) *= inv;
        for (size_t j = 0; j < b.cols(); j++)
            b.at(next_row, j) *= inv;
        for (size_t i = 0; i < a.rows(); i++) {
            if (i == next_row || a.at(i, col).is_zero())
                continue;
            Rational f = a.at(i, col);
            for (size_t j = col; j < a.cols(); j++)
                a.at(i, j) -= f * a.at(next_row, j);
            for (size_t j = 0; j < b.cols(); j++)
                b.at(i, j) -= f * b.at(next_row, j);
        }
        pivots.push_back(col);
        next_row++;
    }
    return pivots;
}

} // namespace

size_t rank(const Matrix& a) {
    Matrix work = a;
    Matrix none(a.rows(), 0);
    return reduce_augmented(work, none).size();
}

Matrix solve_right(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw Error(ErrorCode::Dimension, "solve dimension mismatch");
    Matrix left = a;
    Matrix right = b;
    std::vector<size_t> pivots = reduce_augmented(left, right);
    for (size_t i = pivots.size(); i < left.rows(); i++)
        for (size_t j = 0; j < right.cols(); j++)
            if (!right.at(i, j).is_zero())
                throw Error(ErrorCode::Inconsistent, "inconsistent linear system");
    if (pivots.size() < a.cols())
        throw Error(ErrorCode::Singular, "linear system has no unique solution");
    // Full column rank: pivot of row i is column i, so X is the top block.
    Matrix x(a.cols(), b.cols());
    for (size_t i = 0; i < a.cols(); i++)
        for (size_t j = 0; j < b.cols(); j++)
            x.at(i, j) = right.at(i, j);
    return x;
}

Matrix invert(const Matrix& a) {
    if (a.rows() != a.cols())
        throw Error(ErrorCode::Dimension, "inverse of non-square matrix");
    Matrix left = a;
    Matrix right = Matrix::identity(a.rows());
    std::vector<size_t> pivots = reduce_augmented(left, right);
    if (pivots.size() < a.rows())
        throw Error(ErrorCode::Singular, "singular matrix");
    return right;
}

Vec row_times_matrix(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows())
        throw Error(ErrorCode::Dimension, "vector-matrix dimension mismatch");
    Vec out(m.cols());
    for (size_t i = 0; i < m.rows(); i++) {
        if (v[i].is_zero())
            continue;
        for (size_t j = 0; j < m.cols(); j++)
            out[j] += v[i] * m.at(i, j);
    }
    return out;
}

Vec matrix_times_col(const Matrix& m, const Vec& v) {
    if (v.size() != m.cols())
        throw Error(ErrorCode::Dimension, "matrix-vector dimension mismatch");
    Vec out(m.rows());
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = 0; j < m.cols(); j++)
            if (!m.at(i, j).is_zero())
                out[i] += m.at(i, j) * v[j];
    return out;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::Dimension, "dot product dimension mismatch");
    Rational s;
    for (size_t i = 0; i < a.size(); i++)
        s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec kronecker_vec(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++)
            out[i * b.size() + j] = a[i] * b[j];
    return out;
}

} // namespace wfa
