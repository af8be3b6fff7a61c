#include "partot/cover.hpp"

#include "partot/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace partot {

namespace {

// Indices into ambient.simplices(dim) of the simplices of a subcomplex, per dim.
std::vector<std::vector<std::size_t>> simplex_ids(const SimplicialComplex& ambient,
                                                  const std::vector<std::vector<Simplex>>& ambient_simplices,
                                                  const SimplicialComplex& sub) {
    std::vector<std::vector<std::size_t>> ids(ambient_simplices.size());
    const auto sub_simplices = sub.all_simplices();
    for (std::size_t d = 0; d < sub_simplices.size(); ++d) {
        for (const auto& s : sub_simplices[d]) {
            Simplex mapped;
            for (const auto& l : sub.labels(s)) {
                auto v = ambient.index_of(l);
                if (!v) throw InputError("piece vertex " + l.to_string() + " is not a vertex of the complex");
                mapped.push_back(*v);
            }
            std::sort(mapped.begin(), mapped.end());
            if (d >= ambient_simplices.size()) throw InputError("piece is not a subcomplex of the complex");
            const auto& all = ambient_simplices[d];
            auto it = std::lower_bound(all.begin(), all.end(), mapped);
            if (it == all.end() || *it != mapped) throw InputError("piece is not a subcomplex of the complex");
            ids[d].push_back(static_cast<std::size_t>(it - all.begin()));
        }
        std::sort(ids[d].begin(), ids[d].end());
    }
    return ids;
}

std::string render_labels(const std::vector<Label>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i].to_string();
    return out + "]";
}

std::string render_set(PieceSet s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : piece_numbers(s)) {
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return out + "}";
}

} // namespace

CoverDiagram CoverDiagram::from_subcomplexes(SimplicialComplex x, std::vector<SimplicialComplex> pieces,
                                             std::optional<Label> basepoint) {
    if (pieces.empty()) throw InputError("a cover needs at least one piece");
    if (pieces.size() > kMaxPieces) throw InputError("too many pieces for a cover");

    CoverDiagram cov;
    const auto all = x.all_simplices();
    std::vector<std::vector<std::vector<std::size_t>>> piece_ids;
    for (const auto& u : pieces) piece_ids.push_back(simplex_ids(x, all, u));

    // Every facet of X must lie in some piece.
    for (const auto& f : x.facets()) {
        const std::size_t d = f.size() - 1;
        const auto id = static_cast<std::size_t>(std::lower_bound(all[d].begin(), all[d].end(), f) - all[d].begin());
        const bool covered = std::any_of(piece_ids.begin(), piece_ids.end(), [&](const auto& ids) {
            return std::binary_search(ids[d].begin(), ids[d].end(), id);
        });
        if (!covered) throw InputError("facet " + render_labels(x.labels(f)) + " is not covered by any piece");
    }
    if (basepoint) {
        if (!x.index_of(*basepoint)) throw InputError("basepoint " + basepoint->to_string() + " is not a vertex");
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (!pieces[i].index_of(*basepoint))
                throw InputError("basepoint " + basepoint->to_string() + " is missing from piece " +
                                 std::to_string(i + 1));
    }

    const std::size_t masks = std::size_t{1} << pieces.size();
    cov.intersections_.resize(masks);
    cov.ids_.resize(masks);
    for (PieceSet s = 1; s < masks; ++s) {
        const auto low = static_cast<std::size_t>(std::countr_zero(s));
        const PieceSet rest = s & (s - 1);
        if (rest == 0) {
            cov.intersections_[s] = pieces[low].with_basepoint(std::nullopt);
            cov.ids_[s] = piece_ids[low];
            continue;
        }
        cov.intersections_[s] = partot::intersection(cov.intersections_[rest], pieces[low]).with_basepoint(std::nullopt);
        auto& ids = cov.ids_[s];
        ids.resize(all.size());
        for (std::size_t d = 0; d < all.size(); ++d)
            std::set_intersection(cov.ids_[rest][d].begin(), cov.ids_[rest][d].end(), piece_ids[low][d].begin(),
                                  piece_ids[low][d].end(), std::back_inserter(ids[d]));
    }
    cov.ambient_ = std::move(x);
    cov.pieces_ = std::move(pieces);
    cov.basepoint_ = std::move(basepoint);
    return cov;
}

CoverDiagram cover_from_subcomplexes(SimplicialComplex x, std::vector<SimplicialComplex> pieces,
                                     std::optional<Label> basepoint) {
    return CoverDiagram::from_subcomplexes(std::move(x), std::move(pieces), std::move(basepoint));
}

std::vector<std::size_t> piece_numbers(PieceSet s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
        if (s & (PieceSet{1} << i)) out.push_back(i + 1);
    return out;
}

AcyclicityReport check_r_acyclic(const CoverDiagram& cov, int r) {
    if (r < 1 || r > static_cast<int>(cov.size())) throw InputError("acyclicity level r must satisfy 1 <= r <= n");
    AcyclicityReport report;
    const PieceSet masks = PieceSet{1} << cov.size();
    for (PieceSet s = 1; s < masks; ++s) {
        if (std::popcount(s) > r) continue;
        auto h = simplicial_homology(cov.intersection(s), true);
        if (!h.is_zero()) {
            report.ok = false;
            report.failures.push_back({s, std::move(h)});
        }
    }
    return report;
}

ChainComplexInt hocolim_chain(const CoverDiagram& cov) {
    const SimplicialComplex& x = cov.ambient();
    const auto cx = chain_complex(x, false);
    const int top_q = x.dimension();
    const auto n = cov.size();

    // Strict chains S_0 < ... < S_p of nonempty sets, grouped by p.
    const PieceSet masks = PieceSet{1} << n;
    std::vector<std::vector<std::vector<PieceSet>>> chains(n);
    std::vector<PieceSet> cur;
    auto extend = [&](auto&& self) -> void {
        chains[cur.size() - 1].push_back(cur);
        for (PieceSet t = 1; t < masks; ++t)
            if (t != cur.back() && (t & cur.back()) == cur.back()) {
                cur.push_back(t);
                self(self);
                cur.pop_back();
            }
    };
    for (PieceSet s = 1; s < masks; ++s) {
        cur.assign(1, s);
        extend(extend);
    }
    for (auto& group : chains) std::sort(group.begin(), group.end());

    // Position of (chain, simplex) inside its total degree.
    const int top = top_q < 0 ? -1 : static_cast<int>(n) - 1 + top_q;
    std::vector<std::size_t> ranks(top < 0 ? 0 : static_cast<std::size_t>(top + 1), 0);
    std::vector<std::map<std::vector<PieceSet>, std::size_t>> offsets(ranks.size());
    for (int k = 0; k <= top; ++k)
        for (std::size_t p = 0; p < n; ++p) {
            const int q = k - static_cast<int>(p);
            if (q < 0 || q > top_q) continue;
            for (const auto& ch : chains[p]) {
                offsets[k][ch] = ranks[k];
                ranks[k] += cov.intersection_ids(ch.back())[q].size();
            }
        }
    auto position = [&](int k, const std::vector<PieceSet>& ch, int q, std::size_t id) {
        const auto& ids = cov.intersection_ids(ch.back())[q];
        auto it = std::lower_bound(ids.begin(), ids.end(), id);
        if (it == ids.end() || *it != id) throw InvariantError("bar face leaves the intersection");
        return offsets[k].at(ch) + static_cast<std::size_t>(it - ids.begin());
    };

    std::vector<SparseMatrix> boundaries;
    for (int k = 0; k <= top; ++k) {
        SparseMatrix d(k == 0 ? 0 : ranks[k - 1], ranks[k]);
        if (k == 0) {
            boundaries.push_back(std::move(d));
            continue;
        }
        std::vector<std::map<std::size_t, Integer>> cols(ranks[k]);
        const SparseMatrix empty;
        for (std::size_t p = 0; p < n; ++p) {
            const int q = k - static_cast<int>(p);
            if (q < 0 || q > top_q) continue;
            const SparseMatrix dq = q > 0 ? cx.boundary(q) : empty;
            for (const auto& ch : chains[p]) {
                const auto& ids = cov.intersection_ids(ch.back())[q];
                for (std::size_t j = 0; j < ids.size(); ++j) {
                    auto& col = cols[offsets[k].at(ch) + j];
                    for (std::size_t i = 0; p > 0 && i <= p; ++i) {
                        std::vector<PieceSet> face = ch;
                        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                        col[position(k - 1, face, q, ids[j])] += (i % 2 == 0 ? 1 : -1);
                    }
                    if (q > 0)
                        for (const auto& [row, value] : dq.column(ids[j]))
                            col[position(k - 1, ch, q - 1, row)] += (p % 2 == 0 ? value : Integer(-value));
                }
            }
        }
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [row, value] : cols[c])
                if (value != 0) d.push(row, c, value);
        boundaries.push_back(std::move(d));
    }
    if (ranks.empty()) return ChainComplexInt::zero(0, -1);
    return ChainComplexInt(0, ranks, std::move(boundaries));
}

CoverReport verify_cover_theorem(const CoverDiagram& cov, int r) {
    CoverReport report;
    report.n = static_cast<int>(cov.size());
    report.r = r;
    auto acyclic = check_r_acyclic(cov, r);
    report.bound = 2 * r - report.n + 1;
    report.precondition_ok = acyclic.ok;
    report.precondition_failures = std::move(acyclic.failures);
    for (const auto& w : report.precondition_failures)
        report.failures.push_back("intersection over " + render_set(w.pieces) + " is not acyclic");

    const auto hx = simplicial_homology(cov.ambient(), false);
    report.hocolim_matches = homology(hocolim_chain(cov)).same_as(hx);
    if (!report.hocolim_matches) report.failures.push_back("homology of the bar construction differs from H(X)");

    report.reduced_homology = simplicial_homology(cov.ambient(), true);
    report.connectivity_ok = true;
    for (int i = -1; i <= report.bound - 1; ++i)
        if (!report.reduced_homology.at(i).is_zero()) {
            report.connectivity_ok = false;
            report.failures.push_back("reduced H_" + std::to_string(i) + "(X) = " +
                                      report.reduced_homology.at(i).to_string() + " is nonzero");
        }
    report.weakenings = {
        "open cover modelled by a closed subcomplex cover",
        "weak contractibility of intersections replaced by vanishing reduced homology",
        "suspension conclusion checked only as vanishing reduced homology through degree 2r-n",
    };
    return report;
}

SimplicialComplex nerve_of_cover(const CoverDiagram& cov) {
    const PieceSet masks = PieceSet{1} << cov.size();
    std::vector<std::vector<Label>> facets;
    for (PieceSet s = 1; s < masks; ++s) {
        if (cov.intersection(s).empty()) continue;
        std::vector<Label> f;
        for (std::size_t i : piece_numbers(s)) f.emplace_back(static_cast<std::int64_t>(i));
        facets.push_back(std::move(f));
    }
    return complex_from_facets(facets);
}

} // namespace partot
