#pragma once

#include "partot/label.hpp"
#include "partot/simplicial_complex.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace partot {

/// Finite poset on labelled elements. The strict order is stored as a dense
/// boolean matrix (transitively closed); the Hasse diagram is derived from it.
class FinPoset {
public:
    FinPoset() = default;

    /// Reflexive-transitive closure of `pairs` (a <= b). Throws InputError on
    /// duplicate or unknown labels and InvariantError if the closure has a cycle.
    static FinPoset from_relation(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& pairs);

    /// Elements with an already closed strict order `less[i][j]` (i < j).
    /// Transitivity and irreflexivity are re-checked.
    static FinPoset from_strict_order(std::vector<Label> elements, std::vector<std::vector<bool>> less);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<Label>& elements() const { return elements_; }
    const Label& element(std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(const Label& l) const;

    bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
    bool leq(std::size_t i, std::size_t j) const { return i == j || less_[i][j]; }

    /// Covering pairs (i, j): i < j with nothing strictly between.
    const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const { return hasse_; }
    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;
    std::optional<std::size_t> maximum() const;

    /// Full subposet on the given element indices (kept in the given order).
    FinPoset full_subposet(const std::vector<std::size_t>& indices) const;

    friend bool operator==(const FinPoset&, const FinPoset&) = default;

private:
    void finish();

    std::vector<Label> elements_;
    std::vector<std::vector<bool>> less_;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

/// Nonempty subsets U of S with min_card <= |U| <= max_card, ordered by
/// inclusion. Elements are labelled "{a,b,...}" and listed by size, then
/// lexicographically. Throws InputError on an empty or out-of-range window.
FinPoset subset_poset(const std::vector<Label>& s, std::size_t min_card, std::size_t max_card);
/// S = {0, ..., n-1}.
FinPoset subset_poset(std::size_t n, std::size_t min_card, std::size_t max_card);
/// Label of a subset of {0, ..., n-1}, as used by subset_poset.
Label subset_label(const std::vector<std::size_t>& subset);

/// Nonzero subspaces of F_q^n of dimension <= max_dim, ordered by
/// containment. Each subspace is labelled by its reduced row echelon basis,
/// e.g. "<100,011>" (entries separated by '.' once q > 10). Only prime q.
FinPoset subspace_poset(unsigned q, std::size_t n, std::size_t max_dim);
bool is_prime(unsigned q);

/// Simplices are the chains of P, facets the maximal chains. Vertex labels
/// are the element labels.
SimplicialComplex order_complex(const FinPoset& p);

/// Longest chain length minus one. Throws PreconditionError on the empty poset.
int poset_dimension(const FinPoset& p);

/// Full subposet C of an ambient poset D.
class PosetInclusion {
public:
    /// C = full subposet of D on the given labels. Throws InputError on
    /// labels missing from D.
    static PosetInclusion full_subposet(FinPoset ambient, const std::vector<Label>& sub_labels);
    /// Checks that C's elements lie in D and that C carries the restricted order.
    static PosetInclusion from_posets(FinPoset ambient, const FinPoset& sub);

    const FinPoset& ambient() const { return ambient_; }
    const FinPoset& sub() const { return sub_; }
    /// Indices into ambient() of the elements of C, in C's order.
    const std::vector<std::size_t>& sub_indices() const { return sub_indices_; }
    bool in_sub(std::size_t ambient_index) const { return in_sub_[ambient_index]; }
    /// Indices into ambient() of D \ C.
    std::vector<std::size_t> complement_indices() const;
    FinPoset complement() const { return ambient_.full_subposet(complement_indices()); }

private:
    FinPoset ambient_;
    FinPoset sub_;
    std::vector<std::size_t> sub_indices_;
    std::vector<bool> in_sub_;
};

/// {c in C : c <= d}. Throws InputError if d is not an element of D.
FinPoset down_slice(const PosetInclusion& inc, const Label& d);

/// Order complex of the down slice: the value of Lan(*) at d.
SimplicialComplex lan_point(const PosetInclusion& inc, const Label& d);

/// Functor from a poset to simplicial complexes, given on covering relations
/// by vertex assignments.
struct DiagramOfComplexes {
    FinPoset index;
    std::vector<SimplicialComplex> values;
    /// Keyed by Hasse edge (i, j), i < j: vertex of values[i] -> vertex of values[j].
    std::map<std::pair<std::size_t, std::size_t>, std::map<Label, Label>> maps;

    /// Names the first defect found: a map that is not simplicial, or two
    /// Hasse paths with different composites. Empty when the diagram is valid.
    std::optional<std::string> check() const;
};

/// T(d) = unreduced suspension of lan_point(d), maps induced by the slice
/// inclusions with poles sent to poles. Both poles carry the same labels at
/// every d (chosen fresh against all labels of C). Throws PreconditionError
/// if some slice is empty.
DiagramOfComplexes t_functor(const PosetInclusion& inc);

/// No element of C lies strictly below an element of D \ C (C is upward closed).
bool check_fence_condition(const PosetInclusion& inc);

} // namespace partot
