#pragma once

#include "partot/chain_complex.hpp"
#include "partot/simplicial_complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace partot {

/// Index sets S of pieces are bit masks: piece i (0-based) is bit i.
using PieceSet = std::uint32_t;

/// Closed cover of X by subcomplexes U_1 .. U_n with all 2^n - 1
/// intersections precomputed.
class CoverDiagram {
public:
    static constexpr std::size_t kMaxPieces = 16;

    /// Throws InputError if a piece is not a subcomplex of X, the pieces do
    /// not cover X, or the basepoint is missing from a piece. Without a
    /// basepoint the cover is unpointed (needed for general nerves).
    static CoverDiagram from_subcomplexes(SimplicialComplex x, std::vector<SimplicialComplex> pieces,
                                          std::optional<Label> basepoint);

    const SimplicialComplex& ambient() const { return ambient_; }
    std::size_t size() const { return pieces_.size(); }
    const SimplicialComplex& piece(std::size_t i) const { return pieces_.at(i); }
    const std::optional<Label>& basepoint() const { return basepoint_; }

    /// Intersection of the pieces in S (S nonempty).
    const SimplicialComplex& intersection(PieceSet s) const { return intersections_.at(s); }
    /// Per dimension, indices into ambient().simplices(dim) of the simplices
    /// of the intersection over S, sorted.
    const std::vector<std::vector<std::size_t>>& intersection_ids(PieceSet s) const { return ids_.at(s); }

private:
    SimplicialComplex ambient_;
    std::vector<SimplicialComplex> pieces_;
    std::optional<Label> basepoint_;
    std::vector<SimplicialComplex> intersections_;
    std::vector<std::vector<std::vector<std::size_t>>> ids_;
};

CoverDiagram cover_from_subcomplexes(SimplicialComplex x, std::vector<SimplicialComplex> pieces,
                                     std::optional<Label> basepoint);

/// 1-based piece numbers of a set, for reports.
std::vector<std::size_t> piece_numbers(PieceSet s);

struct AcyclicityWitness {
    PieceSet pieces = 0;
    /// Reduced homology of the intersection (H_{-1} = Z when it is empty).
    Homology reduced;
};

struct AcyclicityReport {
    bool ok = true;
    std::vector<AcyclicityWitness> failures;
};

/// Every intersection of at most r pieces has vanishing reduced homology.
/// Throws InputError unless 1 <= r <= n.
AcyclicityReport check_r_acyclic(const CoverDiagram& cov, int r);

/// Normalized bar construction over strict chains S_0 < ... < S_p of
/// nonempty piece sets, with value C_*(U_{S_p}) (unreduced). Degree k is the
/// sum over p + q = k; the differential on (S_0 < ... < S_p, x) is
/// sum_i (-1)^i (delete S_i, x) + (-1)^p (same chain, dx), where deleting
/// S_p pushes x into the larger complex U_{S_{p-1}}.
ChainComplexInt hocolim_chain(const CoverDiagram& cov);

struct CoverReport {
    int n = 0;
    int r = 0;
    /// 2r - n + 1; reduced homology must vanish through degree bound - 1.
    int bound = 0;
    bool precondition_ok = false;
    std::vector<AcyclicityWitness> precondition_failures;
    bool hocolim_matches = false;
    bool connectivity_ok = false;
    Homology reduced_homology;
    std::vector<std::string> failures;
    std::vector<std::string> weakenings;
};

/// Checks H(hocolim) = H(X) and that reduced H_i(X) vanishes for i <= 2r - n.
/// A failed precondition is recorded in the report, never dropped.
CoverReport verify_cover_theorem(const CoverDiagram& cov, int r);

/// Vertices 1..n; a set of pieces spans a simplex iff its intersection is nonempty.
SimplicialComplex nerve_of_cover(const CoverDiagram& cov);

} // namespace partot
