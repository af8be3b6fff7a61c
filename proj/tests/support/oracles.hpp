#pragma once

// Independent reference computations used only by the tests. Nothing here
// goes through Smith or Hermite reduction.

#include "partot/integer_matrix.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace partot::testing {

inline Integer determinant(const Matrix& m) {
    // Laplace expansion along the first row; fine for the tiny sizes used.
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const Integer minor = determinant(m.select_rows(rows).select_columns(cols));
        det += (j % 2 == 0 ? 1 : -1) * m(0, j) * minor;
    }
    return det;
}

inline Integer gcd_integer(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// gcd of all k x k minors (the k-th determinantal divisor).
inline Integer determinantal_divisor(const Matrix& m, std::size_t k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
        for (const auto& c : cs) g = gcd_integer(g, determinant(m.select_rows(r).select_columns(c)));
    return g;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

/// Random unimodular matrix: a product of elementary operations, a signed
/// permutation and small shears.
inline Matrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 6) {
    Matrix u = Matrix::identity(n);
    if (n == 0) return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> mult(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t a = pick(rng), b = pick(rng);
        if (a != b) u.add_row_multiple(a, b, mult(rng));
        if (rng() % 3 == 0) u.swap_rows(a, b);
        if (rng() % 5 == 0) u.negate_row(a);
    }
    return u;
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace partot::testing
