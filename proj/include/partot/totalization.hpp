#pragma once

#include "partot/chain_complex.hpp"
#include "partot/cosimplicial.hpp"

#include <vector>

namespace partot {

// Total complexes of the conormalized double complex. Degree k of a stripe
// first <= s <= last is the sum over s of (N^s)_{k+s}, blocks ordered by s;
// the differential is delta + (-1)^s d. Stripes occupy degrees
// lo - last .. hi - first.

/// Stripe first..last of the total complex (empty stripe when first > last).
ChainComplexInt stripe_complex(const Conormalization& n, int first, int last);

/// Tot_n = stripe 0..n. Throws InputError unless 0 <= n <= M.
ChainComplexInt tot_n(const CosimplicialChain& x, int n);

struct TotTower {
    std::vector<ChainComplexInt> stages;
    /// projections[k - 1] : Tot_k -> Tot_{k-1}, dropping the s = k block.
    std::vector<ChainMap> projections;
};

TotTower tower(const CosimplicialChain& x);

/// Kernel of Tot_m -> Tot_n, i.e. the stripe n < s <= m. n = -1 gives Tot_m.
/// Throws InputError unless -1 <= n <= m <= M.
ChainComplexInt tower_fiber(const CosimplicialChain& x, int n, int m);
ChainComplexInt tower_fiber(const Conormalization& c, int n, int m);

/// Fiber homology of X[j] equals the fiber homology of X shifted by j.
bool shift_check(const CosimplicialChain& x, int n, int m, int j);

/// For a levelwise quasi-isomorphism f : X -> Y, the induced maps on every
/// tower fiber (n < m) are quasi-isomorphisms. Shape errors raise
/// InputError; a map that is not cosimplicial or not a levelwise
/// quasi-isomorphism raises PreconditionError.
bool quasi_iso_invariance(const CosimplicialChain& x, const CosimplicialChain& y, const CosimplicialMap& f);

} // namespace partot
