#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "core/rational.hpp"

namespace wfa {

using Vec = std::vector<Rational>;

// Dense row-major matrix over the rationals. 0xk and kx0 shapes are legal.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> grid);

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
    static Matrix from_cols(const std::vector<Vec>& cols, size_t rows);
    static Matrix row(const Vec& v);
    static Matrix col(const Vec& v);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    Vec row_vec(size_t r) const;
    Vec col_vec(size_t c) const;

    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    size_t rows_;
    size_t cols_;
    std::vector<Rational> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

Matrix kronecker(const Matrix& a, const Matrix& b);

size_t rank(const Matrix& a);

// Solves a*X = b for the unique X; errors if the system is inconsistent or
// the solution is not unique (a must have trivial kernel on its columns).
Matrix solve_right(const Matrix& a, const Matrix& b);

Matrix invert(const Matrix& a);

// Vector helpers used to evaluate automata without materializing products.
Vec row_times_matrix(const Vec& v, const Matrix& m);
Vec matrix_times_col(const Matrix& m, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
Vec kronecker_vec(const Vec& a, const Vec& b);

} // namespace wfa
