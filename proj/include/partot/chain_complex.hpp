#pragma once

#include "partot/integer_matrix.hpp"
#include "partot/lattice.hpp"

#include <cstddef>
#include <vector>

namespace partot {

/// Bounded chain complex of finitely generated free abelian groups,
/// C_lo <- ... <- C_hi, with boundary d_k : C_k -> C_{k-1} stored sparsely.
/// Construction checks shapes and d_{k} d_{k+1} = 0.
class ChainComplexInt {
public:
    ChainComplexInt() = default;
    /// boundaries[i] is d_{lo+i}; its row count must be rank(lo+i-1), which
    /// is 0 for i = 0.
    ChainComplexInt(int lo, std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);
    ChainComplexInt(int lo, std::vector<std::size_t> ranks, const std::vector<Matrix>& boundaries);

    /// The zero complex with the given (possibly empty) degree range.
    static ChainComplexInt zero(int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int k) const;
    /// d_k; a correctly shaped zero matrix outside the stored range.
    SparseMatrix boundary(int k) const;
    Matrix boundary_dense(int k) const { return boundary(k).to_dense(); }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// Same groups in degrees shifted up by j (C[j]_k = C_{k-j}); the
    /// boundary picks up the sign (-1)^j.
    ChainComplexInt shifted(int j) const;
    long long euler_characteristic() const;

    friend bool operator==(const ChainComplexInt&, const ChainComplexInt&) = default;

private:
    void validate() const;

    int lo_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<SparseMatrix> boundaries_;
};

using HomologyGroup = AbelianGroup;

/// Homology groups H_lo .. H_hi of a complex.
struct Homology {
    int lo = 0;
    std::vector<HomologyGroup> groups;

    int hi() const { return lo + static_cast<int>(groups.size()) - 1; }
    /// Zero group outside the stored range.
    HomologyGroup at(int k) const;
    bool is_zero() const;
    /// Same groups in every degree, regardless of how the ranges are padded.
    bool same_as(const Homology& other) const;
};

Homology homology(const ChainComplexInt& c);

/// Per-degree integer matrices f_k : C_k -> D_k.
struct ChainMap {
    int lo = 0;
    std::vector<Matrix> components;

    int hi() const { return lo + static_cast<int>(components.size()) - 1; }
    const Matrix& at(int k) const { return components.at(static_cast<std::size_t>(k - lo)); }

    static ChainMap identity(const ChainComplexInt& c);
    static ChainMap zero(const ChainComplexInt& source, const ChainComplexInt& target);
};

/// Composite g o f over the common degree range.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Shapes match and f commutes with the boundaries.
bool is_chain_map(const ChainMap& f, const ChainComplexInt& source, const ChainComplexInt& target);

/// cone(f)_k = A_{k-1} + B_k with d(a, b) = (-da, f a + db).
ChainComplexInt mapping_cone(const ChainMap& f, const ChainComplexInt& source, const ChainComplexInt& target);

/// f induces an isomorphism on homology (equivalently its cone is acyclic).
bool is_quasi_isomorphism(const ChainMap& f, const ChainComplexInt& source, const ChainComplexInt& target);

} // namespace partot
