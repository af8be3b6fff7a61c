#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace partot {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    Matrix transpose() const;

    Matrix column(std::size_t j) const;
    Matrix columns(std::size_t first, std::size_t count) const;
    Matrix rows_range(std::size_t first, std::size_t count) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_columns(const std::vector<std::size_t>& idx) const;

    /// Places `block` with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, const Matrix& block);

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    std::string to_string() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Integer& k, const Matrix& a);

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Sparse integer matrix, stored by columns with strictly increasing row
/// indices and no explicit zeros.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Integer>;
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix from_dense(const Matrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    const Column& column(std::size_t j) const { return columns_[j]; }
    /// Appends an entry to column j; rows must arrive in increasing order.
    void push(std::size_t row, std::size_t col, Integer value);

    Matrix to_dense() const;
    bool is_zero() const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

/// Result of integer column reduction: `input * transform == echelon`,
/// `transform` unimodular. The first `rank` columns of `echelon` are nonzero
/// with strictly increasing pivot rows, positive pivots, and entries to the
/// left of each pivot reduced into [0, pivot); the remaining columns are zero.
/// The nonzero part is the column Hermite normal form, which depends only on
/// the lattice spanned by the input columns.
struct ColumnEchelon {
    Matrix echelon;
    Matrix transform;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const Matrix& a, bool with_transform = true);

/// Smith normal form `left * a * right == diagonal`. Invariants are the
/// nonzero diagonal entries d1 | d2 | ... (all positive).
struct SmithForm {
    Matrix diagonal;
    Matrix left;
    Matrix right;
    std::vector<Integer> invariants;
};

/// Pivot rule: smallest nonzero absolute value in the active block, ties
/// broken by (row, column) order, so the result is reproducible bit for bit.
SmithForm smith_normal_form(const Matrix& a, bool with_transforms = false);

std::vector<Integer> smith_invariants(const Matrix& a);

/// Invariants of a sparse matrix. Unit pivots are eliminated sparsely first;
/// the leftover block goes through the dense routine.
std::vector<Integer> smith_invariants(const SparseMatrix& a);

std::size_t rank(const Matrix& a);

/// Inverse of a square unimodular matrix; throws InvariantError otherwise.
Matrix unimodular_inverse(const Matrix& a);

} // namespace partot
