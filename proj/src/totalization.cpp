#include "partot/totalization.hpp"

#include "partot/errors.hpp"

#include <algorithm>

namespace partot {

namespace {

// Column offsets of the blocks first..last in total degree k.
std::vector<std::size_t> block_offsets(const DoubleComplex& n, int first, int last, int k) {
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (int s = first; s <= last; ++s) {
        off.push_back(total);
        total += n.rank(s, k + s);
    }
    off.push_back(total);
    return off;
}

// Block-diagonal map on the stripe induced by per-(s, t) matrices.
ChainMap stripe_map(const std::vector<std::vector<Matrix>>& g, const DoubleComplex& source, const DoubleComplex& target,
                    int first, int last) {
    ChainMap f;
    f.lo = source.lo - last;
    for (int k = source.lo - last; k <= source.hi - first; ++k) {
        const auto so = block_offsets(source, first, last, k), to = block_offsets(target, first, last, k);
        Matrix m(to.back(), so.back());
        for (int s = first; s <= last; ++s) {
            const int t = k + s;
            if (t < source.lo || t > source.hi) continue;
            const auto i = static_cast<std::size_t>(s - first);
            m.set_block(to[i], so[i], g[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - source.lo)]);
        }
        f.components.push_back(std::move(m));
    }
    return f;
}

void check_fiber_range(int truncation, int n, int m) {
    if (n < -1 || n > m || m > truncation)
        throw InputError("tower fiber needs -1 <= n <= m <= " + std::to_string(truncation) + ", got n=" +
                         std::to_string(n) + ", m=" + std::to_string(m));
}

} // namespace

ChainComplexInt stripe_complex(const Conormalization& c, int first, int last) {
    const DoubleComplex& n = c.n;
    const int klo = n.lo - last, khi = n.hi - first;
    if (first > last) return ChainComplexInt::zero(klo, khi);
    if (first < 0 || last >= n.columns()) throw InputError("stripe outside the conormalized range");
    std::vector<std::size_t> ranks;
    std::vector<Matrix> bd;
    for (int k = klo; k <= khi; ++k) ranks.push_back(block_offsets(n, first, last, k).back());
    for (int k = klo; k <= khi; ++k) {
        const auto cols = block_offsets(n, first, last, k);
        if (k == klo) {
            bd.emplace_back(0, cols.back());
            continue;
        }
        const auto rows = block_offsets(n, first, last, k - 1);
        Matrix d(rows.back(), cols.back());
        for (int s = first; s <= last; ++s) {
            const int t = k + s;
            if (t < n.lo || t > n.hi) continue;
            const auto i = static_cast<std::size_t>(s - first);
            if (s + 1 <= last) d.set_block(rows[i + 1], cols[i], n.delta(s, t));
            if (t - 1 >= n.lo) d.set_block(rows[i], cols[i], Integer(s % 2 == 0 ? 1 : -1) * n.d(s, t));
        }
        bd.push_back(std::move(d));
    }
    if (ranks.empty()) return ChainComplexInt::zero(klo, khi);
    return ChainComplexInt(klo, std::move(ranks), bd);
}

ChainComplexInt tot_n(const CosimplicialChain& x, int n) {
    if (n < 0 || n > x.truncation())
        throw InputError("Tot_n needs 0 <= n <= " + std::to_string(x.truncation()) + ", got " + std::to_string(n));
    return stripe_complex(conormalize(x), 0, n);
}

TotTower tower(const CosimplicialChain& x) {
    const auto c = conormalize(x);
    TotTower out;
    for (int k = 0; k <= x.truncation(); ++k) out.stages.push_back(stripe_complex(c, 0, k));
    for (int k = 1; k <= x.truncation(); ++k) {
        const auto& source = out.stages[static_cast<std::size_t>(k)];
        const auto& target = out.stages[static_cast<std::size_t>(k - 1)];
        ChainMap p;
        p.lo = source.lo();
        for (int d = source.lo(); d <= source.hi(); ++d) {
            Matrix m(target.rank(d), source.rank(d));
            for (std::size_t i = 0; i < target.rank(d); ++i) m(i, i) = 1;
            p.components.push_back(std::move(m));
        }
        out.projections.push_back(std::move(p));
    }
    return out;
}

ChainComplexInt tower_fiber(const Conormalization& c, int n, int m) {
    check_fiber_range(c.n.columns() - 1, n, m);
    return stripe_complex(c, n + 1, m);
}

ChainComplexInt tower_fiber(const CosimplicialChain& x, int n, int m) {
    check_fiber_range(x.truncation(), n, m);
    return tower_fiber(conormalize(x), n, m);
}

bool shift_check(const CosimplicialChain& x, int n, int m, int j) {
    check_fiber_range(x.truncation(), n, m);
    const auto a = homology(tower_fiber(shift(x, j), n, m));
    const auto b = homology(tower_fiber(x, n, m));
    const int lo = std::min(a.lo, b.lo + j), hi = std::max(a.hi(), b.hi() + j);
    for (int i = lo; i <= hi; ++i)
        if (!(a.at(i) == b.at(i - j))) return false;
    return true;
}

bool quasi_iso_invariance(const CosimplicialChain& x, const CosimplicialChain& y, const CosimplicialMap& f) {
    if (const auto defect = cosimplicial_map_defect(f, x, y); !defect.empty())
        throw PreconditionError("not a cosimplicial chain map: " + defect);
    const int lo = x.lo(), hi = x.hi();
    for (int s = 0; s <= x.truncation(); ++s) {
        ChainMap fs{lo, f.components[static_cast<std::size_t>(s)]};
        if (!is_quasi_isomorphism(fs, x.level(s), y.level(s)))
            throw PreconditionError("map is not a quasi-isomorphism on level " + std::to_string(s));
    }
    const auto cx = conormalize(x), cy = conormalize(y);
    // Induced maps N^s X -> N^s Y in the canonical bases.
    std::vector<std::vector<Matrix>> g(static_cast<std::size_t>(x.truncation() + 1));
    for (int s = 0; s <= x.truncation(); ++s)
        for (int t = lo; t <= hi; ++t) {
            const auto su = static_cast<std::size_t>(s), tu = static_cast<std::size_t>(t - lo);
            const Matrix image = f.components[su][tu] * cx.basis[su][tu];
            g[su].push_back(Lattice::span(cy.basis[su][tu]).coordinates(image));
        }
    for (int m = 0; m <= x.truncation(); ++m)
        for (int n = -1; n < m; ++n) {
            const auto source = tower_fiber(cx, n, m), target = tower_fiber(cy, n, m);
            const auto map = stripe_map(g, cx.n, cy.n, n + 1, m);
            if (!is_chain_map(map, source, target))
                throw InvariantError("induced fiber map is not a chain map");
            if (!is_quasi_isomorphism(map, source, target)) return false;
        }
    return true;
}

} // namespace partot
