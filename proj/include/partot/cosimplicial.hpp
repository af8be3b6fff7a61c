#pragma once

#include "partot/chain_complex.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace partot {

/// A map between levels: one integer matrix per chain degree lo..hi.
using LevelMap = std::vector<Matrix>;

/// Cosimplicial object in bounded chain complexes, truncated at level M:
/// levels X^0..X^M, cofaces d^i : X^k -> X^{k+1} (0 <= i <= k+1) and
/// codegeneracies s^j : X^k -> X^{k-1} (0 <= j <= k-1). All levels are padded
/// to a common degree range [lo, hi].
class CosimplicialChain {
public:
    CosimplicialChain() = default;
    /// cofaces[k] holds the k+2 maps out of X^k (k < M); codegeneracies[k]
    /// holds the k+1 maps out of X^{k+1}. Shapes are checked (InputError);
    /// identities are left to validate_cosimplicial.
    CosimplicialChain(std::vector<ChainComplexInt> levels, std::vector<std::vector<LevelMap>> cofaces,
                      std::vector<std::vector<LevelMap>> codegeneracies);
    /// Same with an explicit common degree range; levels are padded to it
    /// and maps are indexed by degree lo..hi.
    CosimplicialChain(int lo, int hi, std::vector<ChainComplexInt> levels,
                      std::vector<std::vector<LevelMap>> cofaces,
                      std::vector<std::vector<LevelMap>> codegeneracies);

    int truncation() const { return static_cast<int>(levels_.size()) - 1; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const ChainComplexInt& level(int s) const { return levels_.at(static_cast<std::size_t>(s)); }
    std::size_t rank(int s, int t) const { return level(s).rank(t); }

    /// d^i : X^k_t -> X^{k+1}_t.
    const Matrix& coface(int k, int i, int t) const;
    /// s^j : X^k_t -> X^{k-1}_t (k >= 1).
    const Matrix& codegeneracy(int k, int j, int t) const;
    const LevelMap& coface_map(int k, int i) const;
    const LevelMap& codegeneracy_map(int k, int j) const;

    const std::vector<std::vector<LevelMap>>& cofaces() const { return cofaces_; }
    const std::vector<std::vector<LevelMap>>& codegeneracies() const { return codegeneracies_; }

    friend bool operator==(const CosimplicialChain&, const CosimplicialChain&) = default;

private:
    int lo_ = 0;
    int hi_ = -1;
    std::vector<ChainComplexInt> levels_;
    std::vector<std::vector<LevelMap>> cofaces_;
    std::vector<std::vector<LevelMap>> codegeneracies_;
};

/// Same groups on the degree range [lo, hi] (which must contain c's range).
ChainComplexInt pad_complex(const ChainComplexInt& c, int lo, int hi);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks every coface and codegeneracy is a chain map and every
/// cosimplicial identity, by matrix multiplication. Violations name the
/// identity, the level, the indices and the degree.
ValidationReport validate_cosimplicial(const CosimplicialChain& x);

/// Cosimplicial map f : X -> Y, one LevelMap per level.
struct CosimplicialMap {
    std::vector<LevelMap> components;
};

/// Names the first way in which f fails to be a cosimplicial chain map, or
/// returns an empty string.
std::string cosimplicial_map_defect(const CosimplicialMap& f, const CosimplicialChain& x, const CosimplicialChain& y);

/// Double complex N^s_t with vertical d : N^s_t -> N^s_{t-1} and horizontal
/// delta : N^s_t -> N^{s+1}_t, d d = 0, delta delta = 0, delta d = d delta.
struct DoubleComplex {
    int lo = 0;
    int hi = -1;
    /// ranks[s][t - lo], s = 0..M.
    std::vector<std::vector<std::size_t>> ranks;
    std::vector<std::vector<Matrix>> vertical;
    /// horizontal[s][t - lo] for s < M.
    std::vector<std::vector<Matrix>> horizontal;

    int columns() const { return static_cast<int>(ranks.size()); }
    std::size_t rank(int s, int t) const;
    /// d : N^s_t -> N^s_{t-1}; zero-shaped outside the stored range.
    Matrix d(int s, int t) const;
    /// delta : N^s_t -> N^{s+1}_t; zero-shaped outside the stored range.
    Matrix delta(int s, int t) const;
    /// Column s as a chain complex.
    ChainComplexInt column(int s) const;
    /// Throws InvariantError on a shape mismatch or a failed identity.
    void validate() const;

    friend bool operator==(const DoubleComplex&, const DoubleComplex&) = default;
};

/// Conormalization: N^s = intersection of ker s^j (j < s) with its canonical
/// Hermite basis, vertical = restricted boundary, horizontal = restricted
/// alternating coface sum.
struct Conormalization {
    DoubleComplex n;
    /// basis[s][t - lo]: columns span N^s_t inside X^s_t.
    std::vector<std::vector<Matrix>> basis;
};

/// Throws PreconditionError if X is not a valid cosimplicial object.
Conormalization conormalize(const CosimplicialChain& x);

/// Dual Dold-Kan: X^n = sum over surjections [n] -> [k] of N^k. The
/// coface/codegeneracy for theta sends the tau-summand to the sigma-summand
/// by the identity when sigma theta = tau, by delta when sigma theta = d^0 tau,
/// and by zero otherwise. conormalize(dold_kan(D)) == D.
CosimplicialChain dold_kan(const DoubleComplex& d);

/// Constant object on C with every coface and codegeneracy the identity.
CosimplicialChain constant_object(const ChainComplexInt& c, int truncation);

/// Cochains on the Cech nerve of a `points`-element set over a point: level
/// k is free on (k+1)-tuples (degree 0), cofaces forget a coordinate,
/// codegeneracies repeat one.
CosimplicialChain cech_object(std::size_t points, int truncation);

/// Change of basis u[s][t - lo] (unimodular) on every level.
CosimplicialChain conjugate(const CosimplicialChain& x, const std::vector<std::vector<Matrix>>& u);

/// Levels shifted up by j (X[j]^s = X^s[j]).
CosimplicialChain shift(const CosimplicialChain& x, int j);

/// Keep levels 0..m.
CosimplicialChain truncate(const CosimplicialChain& x, int m);

/// Pad every level (and map) with zeros to the degree range [lo, hi].
CosimplicialChain widen(const CosimplicialChain& x, int lo, int hi);

CosimplicialChain direct_sum(const CosimplicialChain& x, const CosimplicialChain& y);

/// Limit of X^k over surjections [m+1] -> [k], k <= m, realised as compatible
/// tuples, with the canonical map from X^{m+1}.
struct MatchingObject {
    int m = 0;
    /// Compatible tuples in each degree (inside the sum of the X^k_t), and
    /// the matching object as a complex in their basis.
    std::vector<Lattice> tuples;
    ChainComplexInt complex;
    /// X^{m+1}_t -> M^m_t in tuple-basis coordinates.
    LevelMap map;
    /// Kernel of the map inside X^{m+1}_t.
    std::vector<Lattice> kernel;
};

/// Throws InputError unless 0 <= m and m + 1 <= M.
MatchingObject matching_object(const CosimplicialChain& x, int m);

/// Nondecreasing surjections [n] -> [k] for k = 0..n, listed by k then
/// lexicographically; each is the vector of its values.
std::vector<std::vector<int>> surjections_from(int n);

} // namespace partot
