#include "partot/integer_matrix.hpp"

#include "partot/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace partot {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Quotient rounded toward negative infinity; divisor must be positive.
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (q * b != a && a < 0) --q;
    return q;
}

void check_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError(std::string("matrix shape mismatch in ") + what);
}

} // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        for (long long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::column(std::size_t j) const { return columns(j, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

Matrix Matrix::rows_range(std::size_t first, std::size_t count) const {
    Matrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
    if (r + block.rows() > rows_ || c + block.cols() > cols_)
        throw InputError("block does not fit");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
}

void Matrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void Matrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "sum");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "difference");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

Matrix operator*(const Integer& k, const Matrix& a) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= k;
    return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
    Matrix c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
    Matrix c(a.rows() + b.rows(), a.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), 0, b);
    return c;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw InputError("vstack column mismatch");
        rows += b.rows();
    }
    Matrix c(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks) {
        c.set_block(r, 0, b);
        r += b.rows();
    }
    return c;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), a.cols(), b);
    return c;
}

// ---------------------------------------------------------------------------

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) s.columns_[j].emplace_back(i, m(i, j));
    return s;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void SparseMatrix::push(std::size_t row, std::size_t col, Integer value) {
    if (value == 0) return;
    auto& c = columns_.at(col);
    if (row >= rows_ || (!c.empty() && c.back().first >= row))
        throw InputError("sparse entries must be pushed in increasing row order");
    c.emplace_back(row, std::move(value));
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : columns_[j]) m(i, j) = v;
    return m;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("sparse product shape mismatch");
    SparseMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::map<std::size_t, Integer> acc;
        for (const auto& [k, bv] : b.column(j))
            for (const auto& [i, av] : a.column(k)) acc[i] += av * bv;
        for (auto& [i, v] : acc)
            if (v != 0) c.push(i, j, std::move(v));
    }
    return c;
}

// ---------------------------------------------------------------------------

ColumnEchelon column_echelon(const Matrix& a, bool with_transform) {
    ColumnEchelon out;
    out.echelon = a;
    if (with_transform) out.transform = Matrix::identity(a.cols());
    Matrix& e = out.echelon;
    Matrix& v = out.transform;
    const std::size_t n = a.cols();

    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        e.add_col_multiple(dst, src, k);
        if (with_transform) v.add_col_multiple(dst, src, k);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        e.swap_cols(x, y);
        if (with_transform) v.swap_cols(x, y);
    };

    std::size_t p = 0;
    for (std::size_t i = 0; i < a.rows() && p < n; ++i) {
        bool found = false;
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = p; j < n; ++j)
                if (e(i, j) != 0 && (best == n || abs_value(e(i, j)) < abs_value(e(i, best)))) best = j;
            if (best == n) break;
            found = true;
            col_swap(p, best);
            bool clear = true;
            for (std::size_t j = p + 1; j < n; ++j) {
                if (e(i, j) == 0) continue;
                Integer q = e(i, j) / e(i, p);
                col_op(j, p, -q);
                if (e(i, j) != 0) clear = false;
            }
            if (clear) break;
        }
        if (!found) continue;
        if (e(i, p) < 0) {
            e.negate_col(p);
            if (with_transform) v.negate_col(p);
        }
        for (std::size_t k = 0; k < p; ++k) {
            Integer q = floor_div(e(i, k), e(i, p));
            if (q != 0) col_op(k, p, -q);
        }
        out.pivot_rows.push_back(i);
        ++p;
    }
    out.rank = p;
    return out;
}

SmithForm smith_normal_form(const Matrix& a, bool with_transforms) {
    SmithForm out;
    out.diagonal = a;
    Matrix& d = out.diagonal;
    const std::size_t m = a.rows(), n = a.cols();
    if (with_transforms) {
        out.left = Matrix::identity(m);
        out.right = Matrix::identity(n);
    }
    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        d.add_row_multiple(dst, src, k);
        if (with_transforms) out.left.add_row_multiple(dst, src, k);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        d.add_col_multiple(dst, src, k);
        if (with_transforms) out.right.add_col_multiple(dst, src, k);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        bool any = false;
        for (;;) {
            // Smallest |entry| in the active block, first in (row, col) order.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pi == m || abs_value(d(i, j)) < abs_value(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) break;
            any = true;
            d.swap_rows(t, pi);
            d.swap_cols(t, pj);
            if (with_transforms) {
                out.left.swap_rows(t, pi);
                out.right.swap_cols(t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                row_op(i, t, -(d(i, t) / d(t, t)));
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                col_op(j, t, -(d(t, j) / d(t, t)));
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Row and column are clear; enforce divisibility of the rest.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_op(t, bad, 1);
        }
        if (!any) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            if (with_transforms) out.left.negate_row(t);
        }
        out.invariants.push_back(d(t, t));
    }
    return out;
}

std::vector<Integer> smith_invariants(const Matrix& a) { return smith_normal_form(a, false).invariants; }

std::vector<Integer> smith_invariants(const SparseMatrix& a) {
    using Column = SparseMatrix::Column;
    const std::size_t n = a.cols();
    std::vector<Column> cols(n);
    std::vector<std::set<std::size_t>> row_cols(a.rows());
    for (std::size_t j = 0; j < n; ++j) {
        cols[j] = a.column(j);
        for (const auto& [i, v] : cols[j]) row_cols[i].insert(j);
    }
    std::vector<bool> active(n, true);
    std::size_t units = 0;

    auto value_at = [](const Column& c, std::size_t row) -> const Integer* {
        auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const auto& e, std::size_t r) { return e.first < r; });
        return (it != c.end() && it->first == row) ? &it->second : nullptr;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!active[j]) continue;
            std::size_t pivot_row = a.rows();
            Integer pivot_value;
            for (const auto& [i, v] : cols[j]) {
                if (v != 1 && v != -1) continue;
                if (pivot_row == a.rows() || row_cols[i].size() < row_cols[pivot_row].size()) {
                    pivot_row = i;
                    pivot_value = v;
                }
            }
            if (pivot_row == a.rows()) continue;
            const Column pivot_col = cols[j];
            std::vector<std::size_t> touched(row_cols[pivot_row].begin(), row_cols[pivot_row].end());
            for (std::size_t c : touched) {
                if (c == j) continue;
                const Integer factor = *value_at(cols[c], pivot_row) * pivot_value;
                // cols[c] -= factor * pivot_col, merged in row order
                Column merged;
                merged.reserve(cols[c].size() + pivot_col.size());
                auto x = cols[c].begin();
                auto y = pivot_col.begin();
                while (x != cols[c].end() || y != pivot_col.end()) {
                    if (y == pivot_col.end() || (x != cols[c].end() && x->first < y->first)) {
                        merged.push_back(*x++);
                    } else if (x == cols[c].end() || y->first < x->first) {
                        merged.emplace_back(y->first, -factor * y->second);
                        row_cols[y->first].insert(c);
                        ++y;
                    } else {
                        Integer val = x->second - factor * y->second;
                        if (val != 0)
                            merged.emplace_back(x->first, std::move(val));
                        else
                            row_cols[x->first].erase(c);
                        ++x;
                        ++y;
                    }
                }
                cols[c] = std::move(merged);
            }
            for (const auto& [i, v] : cols[j]) row_cols[i].erase(j);
            cols[j].clear();
            active[j] = false;
            ++units;
            progress = true;
        }
    }

    // Dense remainder.
    std::vector<std::size_t> rest_cols;
    std::set<std::size_t> rest_rows;
    for (std::size_t j = 0; j < n; ++j)
        if (active[j] && !cols[j].empty()) {
            rest_cols.push_back(j);
            for (const auto& [i, v] : cols[j]) rest_rows.insert(i);
        }
    std::vector<Integer> result(units, Integer(1));
    if (!rest_cols.empty()) {
        std::map<std::size_t, std::size_t> row_index;
        for (std::size_t r : rest_rows) row_index.emplace(r, row_index.size());
        Matrix dense(rest_rows.size(), rest_cols.size());
        for (std::size_t k = 0; k < rest_cols.size(); ++k)
            for (const auto& [i, v] : cols[rest_cols[k]]) dense(row_index[i], k) = v;
        for (auto& inv : smith_invariants(dense)) result.push_back(std::move(inv));
    }
    return result;
}

std::size_t rank(const Matrix& a) { return column_echelon(a, false).rank; }

Matrix unimodular_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw InvariantError("inverse of a non-square matrix");
    auto snf = smith_normal_form(a, true);
    if (!snf.diagonal.is_identity()) throw InvariantError("matrix is not unimodular");
    return snf.right * snf.left;
}

} // namespace partot
