#include "partot/poset.hpp"

#include "partot/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace partot {

FinPoset FinPoset::from_relation(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& pairs) {
    FinPoset p;
    p.elements_ = std::move(elements);
    const std::size_t n = p.elements_.size();
    std::set<Label> seen(p.elements_.begin(), p.elements_.end());
    if (seen.size() != n) throw InputError("poset elements must be distinct");
    p.less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : pairs) {
        auto i = p.index_of(a), j = p.index_of(b);
        if (!i || !j) throw InputError("relation mentions unknown element " + (!i ? a : b).to_string());
        if (*i != *j) p.less_[*i][*j] = true;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (p.less_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (p.less_[k][j]) p.less_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (p.less_[i][i])
            throw InvariantError("relation is not antisymmetric: cycle through " + p.elements_[i].to_string());
    p.finish();
    return p;
}

FinPoset FinPoset::from_strict_order(std::vector<Label> elements, std::vector<std::vector<bool>> less) {
    FinPoset p;
    p.elements_ = std::move(elements);
    p.less_ = std::move(less);
    const std::size_t n = p.elements_.size();
    if (p.less_.size() != n) throw InputError("order matrix has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (p.less_[i].size() != n) throw InputError("order matrix has the wrong size");
        if (p.less_[i][i]) throw InvariantError("strict order is not irreflexive");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.less_[i][j]) continue;
            if (p.less_[j][i]) throw InvariantError("strict order is not antisymmetric");
            for (std::size_t k = 0; k < n; ++k)
                if (p.less_[j][k] && !p.less_[i][k]) throw InvariantError("strict order is not transitive");
        }
    p.finish();
    return p;
}

void FinPoset::finish() {
    const std::size_t n = elements_.size();
    hasse_.clear();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!less_[i][j]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                if (less_[i][k] && less_[k][j]) covered = false;
            if (covered) hasse_.emplace_back(i, j);
        }
}

std::optional<std::size_t> FinPoset::index_of(const Label& l) const {
    auto it = std::find(elements_.begin(), elements_.end(), l);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::size_t> FinPoset::minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j) {
        bool minimal = true;
        for (std::size_t i = 0; i < size() && minimal; ++i)
            if (less_[i][j]) minimal = false;
        if (minimal) out.push_back(j);
    }
    return out;
}

std::vector<std::size_t> FinPoset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (std::none_of(less_[i].begin(), less_[i].end(), [](bool b) { return b; })) out.push_back(i);
    return out;
}

std::optional<std::size_t> FinPoset::maximum() const {
    const auto top = maximal_elements();
    if (top.size() != 1) return std::nullopt;
    return top.front();
}

FinPoset FinPoset::full_subposet(const std::vector<std::size_t>& indices) const {
    FinPoset p;
    for (std::size_t i : indices) p.elements_.push_back(elements_.at(i));
    p.less_.assign(indices.size(), std::vector<bool>(indices.size(), false));
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b) p.less_[a][b] = less_[indices[a]][indices[b]];
    p.finish();
    return p;
}

// ---------------------------------------------------------------------------
// Subset posets

namespace {

std::string render_subset(const std::vector<Label>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + members[i].to_string();
    return out + "}";
}

} // namespace

Label subset_label(const std::vector<std::size_t>& subset) {
    std::vector<Label> members;
    for (std::size_t v : subset) members.emplace_back(static_cast<std::int64_t>(v));
    return Label(render_subset(members));
}

FinPoset subset_poset(const std::vector<Label>& s, std::size_t min_card, std::size_t max_card) {
    if (min_card < 1 || min_card > max_card || max_card > s.size())
        throw InputError("subset poset needs 1 <= min_card <= max_card <= |S|");
    std::vector<Label> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("ground set has repeated elements");

    const std::size_t n = sorted.size();
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t k = min_card; k <= max_card; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        // prev_permutation on a leading block of trues walks subsets in lex order.
        do {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) sub.push_back(i);
            subsets.push_back(std::move(sub));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    std::vector<Label> labels;
    for (const auto& sub : subsets) {
        std::vector<Label> members;
        for (std::size_t i : sub) members.push_back(sorted[i]);
        labels.emplace_back(render_subset(members));
    }
    std::vector<std::vector<bool>> less(subsets.size(), std::vector<bool>(subsets.size(), false));
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b)
            less[a][b] = subsets[a].size() < subsets[b].size() &&
                         std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(), subsets[a].end());
    FinPoset p = FinPoset::from_strict_order(std::move(labels), std::move(less));
    return p;
}

FinPoset subset_poset(std::size_t n, std::size_t min_card, std::size_t max_card) {
    std::vector<Label> s;
    for (std::size_t i = 0; i < n; ++i) s.emplace_back(static_cast<std::int64_t>(i));
    return subset_poset(s, min_card, max_card);
}

// ---------------------------------------------------------------------------
// Subspace posets over F_q

namespace {

using Row = std::vector<unsigned>;

unsigned inverse_mod(unsigned a, unsigned q) {
    for (unsigned x = 1; x < q; ++x)
        if (a * x % q == 1) return x;
    throw InvariantError("no inverse mod q");
}

// Rank over F_q by Gaussian elimination (rows are consumed).
std::size_t rank_mod(std::vector<Row> rows, unsigned q) {
    std::size_t rank = 0;
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const unsigned inv = inverse_mod(rows[rank][col], q);
        for (auto& x : rows[rank]) x = x * inv % q;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const unsigned f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = (rows[r][c] + (q - f) * rows[rank][c]) % q;
        }
        ++rank;
    }
    return rank;
}

// All k x n reduced row echelon matrices over F_q, pivots in increasing order.
void enumerate_rref(std::size_t n, std::size_t k, unsigned q, std::vector<std::vector<Row>>& out) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) pivots.push_back(i);
        // Free slots: (row, col) with col > pivot of row and col not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pivots[r] + 1; c < n; ++c)
                if (!pick[c]) free.emplace_back(r, c);
        std::vector<unsigned> digits(free.size(), 0);
        for (;;) {
            std::vector<Row> m(k, Row(n, 0));
            for (std::size_t r = 0; r < k; ++r) m[r][pivots[r]] = 1;
            for (std::size_t f = 0; f < free.size(); ++f) m[free[f].first][free[f].second] = digits[f];
            out.push_back(std::move(m));
            // Odometer, last slot fastest.
            std::size_t f = free.size();
            while (f > 0 && digits[f - 1] == q - 1) digits[--f] = 0;
            if (f == 0) break;
            ++digits[f - 1];
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
}

std::string render_rref(const std::vector<Row>& m, unsigned q) {
    std::string out = "<";
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) out += ",";
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (q > 10 && c) out += ".";
            out += std::to_string(m[r][c]);
        }
    }
    return out + ">";
}

} // namespace

bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

FinPoset subspace_poset(unsigned q, std::size_t n, std::size_t max_dim) {
    if (!is_prime(q)) throw InputError("subspace posets need a prime field size, got q = " + std::to_string(q));
    if (n < 1 || max_dim < 1 || max_dim > n) throw InputError("subspace poset needs n >= 1 and 1 <= max_dim <= n");

    std::vector<std::vector<Row>> spaces;
    for (std::size_t k = 1; k <= max_dim; ++k) enumerate_rref(n, k, q, spaces);

    std::vector<Label> labels;
    for (const auto& s : spaces) labels.emplace_back(render_rref(s, q));
    std::vector<std::vector<bool>> less(spaces.size(), std::vector<bool>(spaces.size(), false));
    for (std::size_t a = 0; a < spaces.size(); ++a)
        for (std::size_t b = 0; b < spaces.size(); ++b) {
            if (spaces[a].size() >= spaces[b].size()) continue;
            std::vector<Row> joint = spaces[b];
            joint.insert(joint.end(), spaces[a].begin(), spaces[a].end());
            less[a][b] = rank_mod(std::move(joint), q) == spaces[b].size();
        }
    return FinPoset::from_strict_order(std::move(labels), std::move(less));
}

// ---------------------------------------------------------------------------
// Order complexes

SimplicialComplex order_complex(const FinPoset& p) {
    if (p.empty()) return {};
    std::vector<std::vector<std::size_t>> up(p.size());
    for (const auto& [i, j] : p.hasse_edges()) up[i].push_back(j);

    // Maximal chains are exactly the Hasse paths from a minimal to a maximal element.
    std::vector<std::vector<Label>> facets;
    std::vector<Label> chain;
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        chain.push_back(p.element(v));
        if (up[v].empty()) facets.push_back(chain);
        for (std::size_t w : up[v]) walk(w);
        chain.pop_back();
    };
    for (std::size_t m : p.minimal_elements()) walk(m);
    return complex_from_facets(facets);
}

int poset_dimension(const FinPoset& p) {
    if (p.empty()) throw PreconditionError("dimension of the empty poset is undefined");
    // Elements sorted by the number of elements below them form a linear extension.
    std::vector<std::size_t> below(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.less(j, i)) ++below[i];
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

    std::vector<int> longest(p.size(), 1);
    int best = 1;
    for (std::size_t j : order) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.less(i, j)) longest[j] = std::max(longest[j], longest[i] + 1);
        best = std::max(best, longest[j]);
    }
    return best - 1;
}

// ---------------------------------------------------------------------------
// Inclusions, slices, T

PosetInclusion PosetInclusion::full_subposet(FinPoset ambient, const std::vector<Label>& sub_labels) {
    PosetInclusion inc;
    inc.in_sub_.assign(ambient.size(), false);
    for (const auto& l : sub_labels) {
        auto idx = ambient.index_of(l);
        if (!idx) throw InputError("subposet element " + l.to_string() + " is not in the ambient poset");
        if (inc.in_sub_[*idx]) throw InputError("subposet element " + l.to_string() + " is listed twice");
        inc.in_sub_[*idx] = true;
        inc.sub_indices_.push_back(*idx);
    }
    inc.sub_ = ambient.full_subposet(inc.sub_indices_);
    inc.ambient_ = std::move(ambient);
    return inc;
}

PosetInclusion PosetInclusion::from_posets(FinPoset ambient, const FinPoset& sub) {
    PosetInclusion inc = full_subposet(std::move(ambient), sub.elements());
    if (!(inc.sub_ == sub)) throw InputError("subposet order is not the restriction of the ambient order");
    return inc;
}

std::vector<std::size_t> PosetInclusion::complement_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_.size(); ++i)
        if (!in_sub_[i]) out.push_back(i);
    return out;
}

namespace {

std::vector<std::size_t> slice_indices(const PosetInclusion& inc, std::size_t d) {
    std::vector<std::size_t> out;
    for (std::size_t c : inc.sub_indices())
        if (inc.ambient().leq(c, d)) out.push_back(c);
    return out;
}

std::size_t ambient_index(const PosetInclusion& inc, const Label& d) {
    auto idx = inc.ambient().index_of(d);
    if (!idx) throw InputError("element " + d.to_string() + " is not in the ambient poset");
    return *idx;
}

} // namespace

FinPoset down_slice(const PosetInclusion& inc, const Label& d) {
    return inc.ambient().full_subposet(slice_indices(inc, ambient_index(inc, d)));
}

SimplicialComplex lan_point(const PosetInclusion& inc, const Label& d) { return order_complex(down_slice(inc, d)); }

DiagramOfComplexes t_functor(const PosetInclusion& inc) {
    const FinPoset& dpos = inc.ambient();
    std::set<Label> used(inc.sub().elements().begin(), inc.sub().elements().end());
    std::string north = "north", south = "south";
    while (used.count(Label(north))) north += "'";
    while (used.count(Label(south))) south += "'";

    DiagramOfComplexes t;
    t.index = dpos;
    for (std::size_t d = 0; d < dpos.size(); ++d) {
        const auto slice = dpos.full_subposet(slice_indices(inc, d));
        if (slice.empty())
            throw PreconditionError("slice of C below " + dpos.element(d).to_string() +
                                    " is empty; the pushout model for T does not apply");
        t.values.push_back(unreduced_suspension(order_complex(slice), Label(north), Label(south)));
    }
    for (const auto& [i, j] : dpos.hasse_edges()) {
        std::map<Label, Label> m;
        for (const auto& v : t.values[i].vertices()) m.emplace(v, v);
        t.maps.emplace(std::make_pair(i, j), std::move(m));
    }
    return t;
}

std::optional<std::string> DiagramOfComplexes::check() const {
    if (values.size() != index.size()) return "diagram has " + std::to_string(values.size()) + " values for " +
                                              std::to_string(index.size()) + " index elements";
    auto apply = [](const std::map<Label, Label>& m, const std::vector<Label>& simplex) -> std::optional<std::vector<Label>> {
        std::vector<Label> image;
        for (const auto& v : simplex) {
            auto it = m.find(v);
            if (it == m.end()) return std::nullopt;
            image.push_back(it->second);
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        return image;
    };
    for (const auto& [edge, m] : maps) {
        const auto& src = values[edge.first];
        const auto& tgt = values[edge.second];
        for (const auto& f : src.facet_labels()) {
            auto image = apply(m, f);
            if (!image || !tgt.contains(*image))
                return "map " + index.element(edge.first).to_string() + " -> " + index.element(edge.second).to_string() +
                       " is not simplicial";
        }
    }
    for (const auto& [i, j] : index.hasse_edges())
        if (!maps.count({i, j}))
            return "missing map for covering relation " + index.element(i).to_string() + " < " +
                   index.element(j).to_string();

    // composite[c] = map from values[a] to values[c] along the first path found;
    // every other path must agree with it edge by edge.
    std::vector<std::vector<std::size_t>> up(index.size());
    for (const auto& [i, j] : index.hasse_edges()) up[i].push_back(j);
    for (std::size_t a = 0; a < index.size(); ++a) {
        std::map<std::size_t, std::map<Label, Label>> composite;
        std::map<Label, Label> id;
        for (const auto& v : values[a].vertices()) id.emplace(v, v);
        composite.emplace(a, std::move(id));
        std::vector<std::size_t> order;
        for (std::size_t b = 0; b < index.size(); ++b)
            if (index.leq(a, b)) order.push_back(b);
        // Sorting by the number of elements below gives a linear extension.
        std::map<std::size_t, std::size_t> below;
        for (std::size_t x : order)
            below[x] = static_cast<std::size_t>(
                std::count_if(order.begin(), order.end(), [&](std::size_t z) { return index.less(z, x); }));
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
        for (std::size_t b : order) {
            for (std::size_t c : up[b]) {
                std::map<Label, Label> via;
                for (const auto& [v, w] : composite.at(b)) via.emplace(v, maps.at({b, c}).at(w));
                auto it = composite.find(c);
                if (it == composite.end())
                    composite.emplace(c, std::move(via));
                else if (it->second != via)
                    return "composites from " + index.element(a).to_string() + " to " + index.element(c).to_string() +
                           " differ along two Hasse paths";
            }
        }
    }
    return std::nullopt;
}

bool check_fence_condition(const PosetInclusion& inc) {
    const auto rest = inc.complement_indices();
    for (std::size_t c : inc.sub_indices())
        for (std::size_t p : rest)
            if (inc.ambient().less(c, p)) return false;
    return true;
}

} // namespace partot
