#pragma once

#include "partot/cosimplicial.hpp"
#include "partot/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partot {

/// Bidegree (s, t): cosimplicial degree s, chain degree t; total degree t - s.
using Bidegree = std::pair<int, int>;
using BigradedGroups = std::map<Bidegree, AbelianGroup>;

struct SpectralPage {
    int r = 1;
    /// Every (s, t) with 0 <= s <= M and lo <= t <= hi.
    BigradedGroups entries;
    /// Image of d_r : E_r^{s,t} -> E_r^{s+r,t+r-1}, keyed by the source; only
    /// nonzero differentials are listed.
    BigradedGroups differentials;

    AbelianGroup at(int s, int t) const;
    bool differential_nonzero(int s, int t) const { return differentials.count({s, t}) > 0; }
};

/// Spectral sequence of Tot_M filtered by s, computed with lattices inside
/// each total degree: Z_r^p = F^p cap D^-1 F^{p+r},
/// E_r^p = Z_r^p / (Z_{r-1}^{p+1} + D Z_{r-1}^{p-r+1}).
struct SpectralSequence {
    int truncation = 0;
    int lo = 0;
    int hi = -1;
    /// pages[r - 1] is E_r, r = 1 .. max(r_max, M + 1).
    std::vector<SpectralPage> pages;
    BigradedGroups e_infinity;
    /// (Z cap F^s + B) / (Z cap F^{s+1} + B) in H_{t-s}(Tot_M).
    BigradedGroups graded_homology;
    /// E_{r+1} agrees with the homology of (E_r, d_r) everywhere.
    bool pages_consistent = true;
    std::vector<std::string> inconsistencies;
    /// E_infinity agrees with graded_homology everywhere.
    bool converges = true;

    const SpectralPage& page(int r) const;
};

/// Throws InputError if r_max < 1 and PreconditionError if X is not valid.
SpectralSequence spectral_sequence(const CosimplicialChain& x, int r_max);

/// H^s of the conormalized cosimplicial group H_t(X^.), computed from cycles
/// and boundaries of the levels: with L^s = {z cycle : s^i z boundary},
/// H^s = {x in L^s : delta x boundary} / (delta L^{s-1} + boundaries); the
/// top level has no outgoing condition.
BigradedGroups e2_from_levelwise_homology(const CosimplicialChain& x);

/// r <= s - 1. Throws InputError unless s >= 1 and r >= 2.
bool differential_range(int s, int r);

struct FringeEntry {
    int s = 0;
    AbelianGroup e2;
    /// Pages r >= 2 on which a nonzero d_r leaves (s, s) or arrives at it.
    std::vector<int> supports;
    std::vector<int> hit_by;
    bool survives = false;
    /// Every differential touching (s, s) has r <= s - 1.
    bool in_range = true;
};

struct FringeReport {
    int n = 0;
    bool passed = true;
    std::vector<FringeEntry> entries;
};

/// For each s > N with E_2^{s,s} != 0, records the differentials touching
/// (s, s) and whether anything survives. Passes when every such class dies
/// by differentials with r <= s - 1; vacuous when there are none.
FringeReport fringe_filtration_check(const SpectralSequence& ss, int n);

} // namespace partot
