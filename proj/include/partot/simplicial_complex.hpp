#pragma once

#include "partot/chain_complex.hpp"
#include "partot/label.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace partot {

/// Sorted vertex indices into SimplicialComplex::vertices().
using Simplex = std::vector<std::size_t>;

/// Finite abstract simplicial complex stored by its facets. Vertices are kept
/// in label order and facets in lexicographic order, so two complexes with the
/// same simplices compare equal.
class SimplicialComplex {
public:
    /// The empty complex.
    SimplicialComplex() = default;

    /// Absorbs non-maximal facets. Throws InputError on an empty facet, a
    /// repeated vertex inside a facet, or a basepoint that is not a vertex.
    static SimplicialComplex from_facets(const std::vector<std::vector<Label>>& facets,
                                         std::optional<Label> basepoint = std::nullopt);

    const std::vector<Label>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::optional<Label> basepoint() const;

    bool empty() const { return facets_.empty(); }
    /// -1 for the empty complex.
    int dimension() const;

    /// All simplices of the given dimension, lexicographically sorted.
    std::vector<Simplex> simplices(int dim) const;
    /// simplices(0), simplices(1), ..., simplices(dimension()).
    std::vector<std::vector<Simplex>> all_simplices() const;
    std::size_t simplex_count() const;

    std::optional<std::size_t> index_of(const Label& v) const;
    std::vector<Label> labels(const Simplex& s) const;
    std::vector<std::vector<Label>> facet_labels() const;
    bool contains(const std::vector<Label>& simplex) const;
    /// Every simplex of `sub` is a simplex of this complex.
    bool contains(const SimplicialComplex& sub) const;

    long long euler_characteristic() const;

    SimplicialComplex with_basepoint(std::optional<Label> basepoint) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Label> vertices_;
    std::vector<Simplex> facets_;
    std::optional<std::size_t> basepoint_;
};

SimplicialComplex complex_from_facets(const std::vector<std::vector<Label>>& facets,
                                      std::optional<Label> basepoint = std::nullopt);

/// The simplex on the vertex labels 0..n-1.
SimplicialComplex full_simplex(std::size_t n);

/// All simplices of dimension <= r.
SimplicialComplex skeleton(const SimplicialComplex& k, int r);

/// Vertices are the simplices of K, labelled by their rendered vertex lists;
/// facets are the maximal inclusion flags.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// Join with two fresh poles; the basepoint is the north pole.
SimplicialComplex unreduced_suspension(const SimplicialComplex& k);
/// Same, with caller-chosen pole labels (which must not be vertices of K).
SimplicialComplex unreduced_suspension(const SimplicialComplex& k, const Label& north, const Label& south);

/// Simplicial chains with basis in lexicographic order of sorted vertex
/// tuples. The reduced complex has an extra Z in degree -1 with the
/// augmentation as d_0.
ChainComplexInt chain_complex(const SimplicialComplex& k, bool reduced = true);

/// Homology with the same convention (reduced by default).
Homology simplicial_homology(const SimplicialComplex& k, bool reduced = true);

/// "Reduced homology is free of rank `count`, concentrated in degree
/// `sphere_dim`" (count == 0 means every reduced group vanishes; sphere_dim
/// is then 0 and carries no meaning). This certifies homology only.
struct WedgeSignature {
    std::size_t sphere_dim = 0;
    std::size_t count = 0;

    bool is_contractible() const { return count == 0; }
    friend bool operator==(const WedgeSignature&, const WedgeSignature&) = default;
};

std::optional<WedgeSignature> wedge_signature(const Homology& reduced);
std::optional<WedgeSignature> wedge_signature(const SimplicialComplex& k);

/// Subcomplex generated by the given simplices (given by labels).
SimplicialComplex generated_subcomplex(const std::vector<std::vector<Label>>& simplices,
                                       std::optional<Label> basepoint = std::nullopt);

/// Literal intersection of the simplex sets of two complexes.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace partot
