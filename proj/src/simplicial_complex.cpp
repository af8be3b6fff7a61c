#include "partot/simplicial_complex.hpp"

#include "partot/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace partot {

std::string Label::to_string() const {
    return is_integer() ? std::to_string(as_integer()) : as_string();
}

namespace {

// Calls f on every (k)-element subset of s, in lexicographic order.
template <typename F>
void for_each_subset(const Simplex& s, std::size_t k, F&& f) {
    if (k > s.size()) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Simplex sub(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) sub[i] = s[idx[i]];
        f(sub);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == s.size() - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string render(const std::vector<Label>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i].to_string();
    return out + "]";
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Label>>& facets,
                                                 std::optional<Label> basepoint) {
    SimplicialComplex k;
    std::set<Label> all;
    for (const auto& f : facets) {
        if (f.empty()) throw InputError("facet is empty");
        all.insert(f.begin(), f.end());
    }
    k.vertices_.assign(all.begin(), all.end());

    std::vector<Simplex> raw;
    raw.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s;
        s.reserve(f.size());
        for (const auto& v : f) s.push_back(*k.index_of(v));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("facet " + render(f) + " repeats a vertex");
        raw.push_back(std::move(s));
    }
    // Largest first so that every potential superset is already kept.
    std::sort(raw.begin(), raw.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<std::vector<std::size_t>> by_vertex(k.vertices_.size());
    for (auto& s : raw) {
        bool absorbed = false;
        for (std::size_t idx : by_vertex[s.front()]) {
            const Simplex& big = k.facets_[idx];
            if (big.size() > s.size() && std::includes(big.begin(), big.end(), s.begin(), s.end())) {
                absorbed = true;
                break;
            }
        }
        if (absorbed) continue;
        for (std::size_t v : s) by_vertex[v].push_back(k.facets_.size());
        k.facets_.push_back(std::move(s));
    }
    std::sort(k.facets_.begin(), k.facets_.end());

    if (basepoint) {
        auto idx = k.index_of(*basepoint);
        if (!idx) throw InputError("basepoint " + basepoint->to_string() + " is not a vertex");
        k.basepoint_ = *idx;
    }
    return k;
}

std::optional<Label> SimplicialComplex::basepoint() const {
    if (!basepoint_) return std::nullopt;
    return vertices_[*basepoint_];
}

int SimplicialComplex::dimension() const {
    std::size_t m = 0;
    for (const auto& f : facets_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
}

std::vector<Simplex> SimplicialComplex::simplices(int dim) const {
    std::vector<Simplex> out;
    if (dim < 0) return out;
    const auto size = static_cast<std::size_t>(dim + 1);
    for (const auto& f : facets_)
        for_each_subset(f, size, [&](const Simplex& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Simplex>> SimplicialComplex::all_simplices() const {
    std::vector<std::vector<Simplex>> out;
    for (int d = 0; d <= dimension(); ++d) out.push_back(simplices(d));
    return out;
}

std::size_t SimplicialComplex::simplex_count() const {
    std::size_t n = 0;
    for (const auto& level : all_simplices()) n += level.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Label& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Label> SimplicialComplex::labels(const Simplex& s) const {
    std::vector<Label> out;
    out.reserve(s.size());
    for (std::size_t i : s) out.push_back(vertices_.at(i));
    return out;
}

std::vector<std::vector<Label>> SimplicialComplex::facet_labels() const {
    std::vector<std::vector<Label>> out;
    for (const auto& f : facets_) out.push_back(labels(f));
    return out;
}

bool SimplicialComplex::contains(const std::vector<Label>& simplex) const {
    Simplex s;
    for (const auto& v : simplex) {
        auto idx = index_of(v);
        if (!idx) return false;
        s.push_back(*idx);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& f) { return std::includes(f.begin(), f.end(), s.begin(), s.end()); });
}

bool SimplicialComplex::contains(const SimplicialComplex& sub) const {
    return std::all_of(sub.facets_.begin(), sub.facets_.end(),
                       [&](const Simplex& f) { return contains(sub.labels(f)); });
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    int d = 0;
    for (const auto& level : all_simplices()) chi += (d++ % 2 == 0 ? 1 : -1) * static_cast<long long>(level.size());
    return chi;
}

SimplicialComplex SimplicialComplex::with_basepoint(std::optional<Label> basepoint) const {
    SimplicialComplex k = *this;
    k.basepoint_.reset();
    if (basepoint) {
        auto idx = index_of(*basepoint);
        if (!idx) throw InputError("basepoint " + basepoint->to_string() + " is not a vertex");
        k.basepoint_ = *idx;
    }
    return k;
}

SimplicialComplex complex_from_facets(const std::vector<std::vector<Label>>& facets, std::optional<Label> basepoint) {
    return SimplicialComplex::from_facets(facets, std::move(basepoint));
}

SimplicialComplex full_simplex(std::size_t n) {
    std::vector<Label> f;
    for (std::size_t i = 0; i < n; ++i) f.emplace_back(static_cast<std::int64_t>(i));
    if (f.empty()) return {};
    return SimplicialComplex::from_facets({f});
}

SimplicialComplex skeleton(const SimplicialComplex& k, int r) {
    if (r < 0) throw InputError("skeleton dimension must be nonnegative");
    if (r >= k.dimension()) return k;
    std::vector<std::vector<Label>> facets;
    for (const auto& s : k.simplices(r)) facets.push_back(k.labels(s));
    // Low-dimensional facets of K survive as they are.
    for (const auto& f : k.facets())
        if (static_cast<int>(f.size()) - 1 < r) facets.push_back(k.labels(f));
    return SimplicialComplex::from_facets(facets, k.basepoint());
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    std::vector<std::vector<Label>> flags;
    for (const auto& f : k.facets()) {
        Simplex order = f;
        do {
            std::vector<Label> flag;
            std::vector<Label> prefix;
            for (std::size_t v : order) {
                prefix.push_back(k.vertices()[v]);
                std::vector<Label> sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                flag.emplace_back(render(sorted));
            }
            flags.push_back(std::move(flag));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::from_facets(flags);
}

SimplicialComplex unreduced_suspension(const SimplicialComplex& k) {
    std::string north = "north", south = "south";
    while (k.index_of(Label(north))) north += "'";
    while (k.index_of(Label(south))) south += "'";
    return unreduced_suspension(k, Label(north), Label(south));
}

SimplicialComplex unreduced_suspension(const SimplicialComplex& k, const Label& north, const Label& south) {
    if (k.empty()) throw PreconditionError("cannot suspend the empty complex");
    if (k.index_of(north) || k.index_of(south) || north == south)
        throw InputError("suspension poles must be fresh and distinct");
    std::vector<std::vector<Label>> facets;
    for (const auto& f : k.facets()) {
        auto labels = k.labels(f);
        labels.push_back(north);
        facets.push_back(labels);
        labels.back() = south;
        facets.push_back(std::move(labels));
    }
    return SimplicialComplex::from_facets(facets, north);
}

ChainComplexInt chain_complex(const SimplicialComplex& k, bool reduced) {
    const auto cells = k.all_simplices();
    const int lo = reduced ? -1 : 0;
    std::vector<std::size_t> ranks;
    std::vector<SparseMatrix> bd;
    if (reduced) {
        ranks.push_back(1);
        bd.emplace_back(0, 1);
    }
    for (std::size_t d = 0; d < cells.size(); ++d) {
        const auto& cur = cells[d];
        ranks.push_back(cur.size());
        if (d == 0) {
            SparseMatrix aug(reduced ? 1 : 0, cur.size());
            if (reduced)
                for (std::size_t j = 0; j < cur.size(); ++j) aug.push(0, j, 1);
            bd.push_back(std::move(aug));
            continue;
        }
        const auto& prev = cells[d - 1];
        SparseMatrix m(prev.size(), cur.size());
        for (std::size_t j = 0; j < cur.size(); ++j) {
            // Faces of a sorted simplex come out in decreasing lexicographic
            // order when dropping vertex 0, 1, ...; collect then sort by row.
            std::vector<std::pair<std::size_t, int>> entries;
            Simplex face(cur[j].size() - 1);
            for (std::size_t drop = 0; drop < cur[j].size(); ++drop) {
                for (std::size_t i = 0, o = 0; i < cur[j].size(); ++i)
                    if (i != drop) face[o++] = cur[j][i];
                auto it = std::lower_bound(prev.begin(), prev.end(), face);
                entries.emplace_back(static_cast<std::size_t>(it - prev.begin()), drop % 2 == 0 ? 1 : -1);
            }
            std::sort(entries.begin(), entries.end());
            for (const auto& [row, sign] : entries) m.push(row, j, sign);
        }
        bd.push_back(std::move(m));
    }
    if (ranks.empty()) {
        ranks.push_back(0);
        bd.emplace_back(0, 0);
    }
    return ChainComplexInt(lo, std::move(ranks), std::move(bd));
}

Homology simplicial_homology(const SimplicialComplex& k, bool reduced) { return homology(chain_complex(k, reduced)); }

std::optional<WedgeSignature> wedge_signature(const Homology& reduced) {
    std::optional<WedgeSignature> sig = WedgeSignature{};
    bool seen = false;
    for (int d = reduced.lo; d <= reduced.hi(); ++d) {
        const auto g = reduced.at(d);
        if (!g.is_free()) return std::nullopt;
        if (g.rank == 0) continue;
        if (seen || d < 0) return std::nullopt;
        seen = true;
        sig = WedgeSignature{static_cast<std::size_t>(d), g.rank};
    }
    return sig;
}

std::optional<WedgeSignature> wedge_signature(const SimplicialComplex& k) {
    return wedge_signature(simplicial_homology(k, true));
}

SimplicialComplex generated_subcomplex(const std::vector<std::vector<Label>>& simplices, std::optional<Label> basepoint) {
    return SimplicialComplex::from_facets(simplices, std::move(basepoint));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<Label>> pieces;
    for (const auto& fa : a.facets()) {
        const auto la = a.labels(fa);
        for (const auto& fb : b.facets()) {
            const auto lb = b.labels(fb);
            std::vector<Label> common;
            std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
            if (!common.empty()) pieces.push_back(std::move(common));
        }
    }
    return SimplicialComplex::from_facets(pieces);
}

} // namespace partot
