#pragma once

#include "partot/poset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partot {

struct PointwiseSignature {
    Label element;
    bool in_sub = false;
    /// Wedge signature of reduced H(T(d)); absent if T(d) is not homologically
    /// a wedge of spheres of one dimension.
    std::optional<WedgeSignature> signature;
};

/// Desuspension analysis of an inclusion C of D.
struct InclusionReport {
    std::vector<PointwiseSignature> pointwise;
    /// Common sphere dimension of T on D \ C, when one exists.
    std::optional<int> p;
    /// poset_dimension(D \ C); -1 when C = D.
    int complement_dim = -1;
    /// p - complement_dim, present only when every check passed and the value
    /// is nonnegative.
    std::optional<int> d_max;
    /// C = D: the fiber is trivial and every delooping exists.
    bool unbounded = false;
    std::vector<std::string> diagnostics;
    /// What the certificate does and does not establish.
    std::string disclaimer;
};

/// Computes T pointwise, the wedge signature of every value, the dimension of
/// D \ C and the resulting bound. Throws PreconditionError if D \ C is not
/// upward closed or a slice is empty.
InclusionReport analyze_inclusion(const PosetInclusion& inc);

struct TotBound {
    /// 2n - m + 2 when valid.
    std::optional<int> bound;
    bool valid = false;
};

/// Delooping range of the fiber of Tot_m -> Tot_n. For m > 2n + 1 there is
/// no positive bound and the result is marked invalid. Throws InputError
/// unless 1 <= n <= m.
TotBound tot_truncation_bound(int n, int m);

/// 2r - n + 1, for 1 <= r <= n (InputError otherwise).
int cover_suspension_bound(int n, int r);
/// n <= 2r - 1.
bool unpointed_check(int n, int r);

/// Connectivity p - d of the suspension functor between wedge categories.
/// Throws PreconditionError unless 0 <= d <= p.
int suspension_functor_connectivity(int p_target, int d);

/// A lift exists when dim K <= m. Throws InputError for dim K < 0.
bool lifting_criterion(int dim_k, int connectivity);

/// P_{<=n+1}({0..m}) inside P({0..m}). Throws InputError unless 0 <= n <= m.
PosetInclusion delta_model(int n, int m);

} // namespace partot
