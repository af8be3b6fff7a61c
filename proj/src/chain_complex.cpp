#include "partot/chain_complex.hpp"

#include "partot/errors.hpp"

#include <algorithm>

namespace partot {

ChainComplexInt::ChainComplexInt(int lo, std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries)
    : lo_(lo), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    validate();
}

ChainComplexInt::ChainComplexInt(int lo, std::vector<std::size_t> ranks, const std::vector<Matrix>& boundaries)
    : lo_(lo), ranks_(std::move(ranks)) {
    boundaries_.reserve(boundaries.size());
    for (const auto& b : boundaries) boundaries_.push_back(SparseMatrix::from_dense(b));
    validate();
}

ChainComplexInt ChainComplexInt::zero(int lo, int hi) {
    const std::size_t n = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
    std::vector<std::size_t> ranks(n, 0);
    std::vector<SparseMatrix> bd(n, SparseMatrix(0, 0));
    return ChainComplexInt(lo, std::move(ranks), std::move(bd));
}

void ChainComplexInt::validate() const {
    if (boundaries_.size() != ranks_.size())
        throw InvariantError("chain complex: need one boundary matrix per degree");
    for (int k = lo_; k <= hi(); ++k) {
        const auto& d = boundaries_[static_cast<std::size_t>(k - lo_)];
        if (d.cols() != rank(k) || d.rows() != rank(k - 1))
            throw InvariantError("chain complex: boundary d_" + std::to_string(k) + " has shape " +
                                 std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + ", expected " +
                                 std::to_string(rank(k - 1)) + "x" + std::to_string(rank(k)));
    }
    for (int k = lo_ + 1; k <= hi(); ++k) {
        const auto& outer = boundaries_[static_cast<std::size_t>(k - 1 - lo_)];
        const auto& inner = boundaries_[static_cast<std::size_t>(k - lo_)];
        if (!(outer * inner).is_zero())
            throw InvariantError("chain complex: d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0");
    }
}

std::size_t ChainComplexInt::rank(int k) const {
    if (k < lo_ || k > hi()) return 0;
    return ranks_[static_cast<std::size_t>(k - lo_)];
}

SparseMatrix ChainComplexInt::boundary(int k) const {
    if (k < lo_ || k > hi()) return SparseMatrix(rank(k - 1), rank(k));
    return boundaries_[static_cast<std::size_t>(k - lo_)];
}

ChainComplexInt ChainComplexInt::shifted(int j) const {
    if (j % 2 == 0) {
        ChainComplexInt c = *this;
        c.lo_ += j;
        return c;
    }
    std::vector<SparseMatrix> bd;
    for (const auto& d : boundaries_) {
        SparseMatrix n(d.rows(), d.cols());
        for (std::size_t c = 0; c < d.cols(); ++c)
            for (const auto& [r, v] : d.column(c)) n.push(r, c, -v);
        bd.push_back(std::move(n));
    }
    return ChainComplexInt(lo_ + j, ranks_, std::move(bd));
}

long long ChainComplexInt::euler_characteristic() const {
    long long chi = 0;
    for (int k = lo_; k <= hi(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(rank(k));
    return chi;
}

HomologyGroup Homology::at(int k) const {
    if (k < lo || k > hi()) return {};
    return groups[static_cast<std::size_t>(k - lo)];
}

bool Homology::is_zero() const {
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.is_zero(); });
}

bool Homology::same_as(const Homology& other) const {
    const int a = std::min(lo, other.lo), b = std::max(hi(), other.hi());
    for (int k = a; k <= b; ++k)
        if (!(at(k) == other.at(k))) return false;
    return true;
}

Homology homology(const ChainComplexInt& c) {
    Homology h;
    h.lo = c.lo();
    // invariants[k - lo] belong to d_k; d_{hi+1} is zero.
    std::vector<std::vector<Integer>> invariants;
    for (int k = c.lo(); k <= c.hi(); ++k) invariants.push_back(smith_invariants(c.boundary(k)));
    for (int k = c.lo(); k <= c.hi(); ++k) {
        const std::size_t i = static_cast<std::size_t>(k - c.lo());
        const std::size_t rank_out = invariants[i].size();
        static const std::vector<Integer> none;
        const auto& in = (k < c.hi()) ? invariants[i + 1] : none;
        HomologyGroup g;
        g.rank = c.rank(k) - rank_out - in.size();
        for (const auto& d : in)
            if (d > 1) g.torsion.push_back(d);
        h.groups.push_back(std::move(g));
    }
    return h;
}

ChainMap ChainMap::identity(const ChainComplexInt& c) {
    ChainMap f;
    f.lo = c.lo();
    for (int k = c.lo(); k <= c.hi(); ++k) f.components.push_back(Matrix::identity(c.rank(k)));
    return f;
}

ChainMap ChainMap::zero(const ChainComplexInt& source, const ChainComplexInt& target) {
    ChainMap f;
    f.lo = std::min(source.lo(), target.lo());
    const int hi = std::max(source.hi(), target.hi());
    for (int k = f.lo; k <= hi; ++k) f.components.emplace_back(target.rank(k), source.rank(k));
    return f;
}

namespace {

Matrix component_or_zero(const ChainMap& f, int k, std::size_t rows, std::size_t cols) {
    if (k < f.lo || k > f.hi()) return Matrix(rows, cols);
    const Matrix& m = f.at(k);
    if (m.rows() != rows || m.cols() != cols)
        throw InvariantError("chain map: component in degree " + std::to_string(k) + " has wrong shape");
    return m;
}

} // namespace

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap h;
    h.lo = std::max(f.lo, g.lo);
    for (int k = h.lo; k <= std::min(f.hi(), g.hi()); ++k) h.components.push_back(g.at(k) * f.at(k));
    return h;
}

bool is_chain_map(const ChainMap& f, const ChainComplexInt& source, const ChainComplexInt& target) {
    const int lo = std::min(source.lo(), target.lo()), hi = std::max(source.hi(), target.hi());
    try {
        for (int k = lo; k <= hi + 1; ++k) {
            const Matrix fk = component_or_zero(f, k, target.rank(k), source.rank(k));
            const Matrix fk1 = component_or_zero(f, k - 1, target.rank(k - 1), source.rank(k - 1));
            if (!(target.boundary_dense(k) * fk == fk1 * source.boundary_dense(k))) return false;
        }
    } catch (const InvariantError&) {
        return false;
    }
    return true;
}

ChainComplexInt mapping_cone(const ChainMap& f, const ChainComplexInt& source, const ChainComplexInt& target) {
    const int lo = std::min(source.lo() + 1, target.lo());
    const int hi = std::max(source.hi() + 1, target.hi());
    std::vector<std::size_t> ranks;
    std::vector<Matrix> bd;
    for (int k = lo; k <= hi; ++k) ranks.push_back(source.rank(k - 1) + target.rank(k));
    for (int k = lo; k <= hi; ++k) {
        const std::size_t a_in = source.rank(k - 1), b_in = target.rank(k);
        const std::size_t a_out = k == lo ? 0 : source.rank(k - 2);
        const std::size_t b_out = k == lo ? 0 : target.rank(k - 1);
        Matrix d(a_out + b_out, a_in + b_in);
        if (k > lo) {
            d.set_block(0, 0, Integer(-1) * source.boundary_dense(k - 1));
            d.set_block(a_out, 0, component_or_zero(f, k - 1, target.rank(k - 1), source.rank(k - 1)));
            d.set_block(a_out, a_in, target.boundary_dense(k));
        }
        bd.push_back(std::move(d));
    }
    return ChainComplexInt(lo, std::move(ranks), bd);
}

bool is_quasi_isomorphism(const ChainMap& f, const ChainComplexInt& source, const ChainComplexInt& target) {
    return homology(mapping_cone(f, source, target)).is_zero();
}

} // namespace partot
