#pragma once

// Random cosimplicial chain objects built from small double complexes via the
// dual Dold-Kan construction, then conjugated by random changes of basis.

#include "partot/cosimplicial.hpp"
#include "support/oracles.hpp"

#include <random>
#include <vector>

namespace partot::testing {

struct CorpusOptions {
    int max_level_rank = 4;
    int min_degree = -3;
    int max_degree = 3;
};

class DoubleComplexBuilder {
public:
    DoubleComplexBuilder(int columns, int lo, int hi) : columns_(columns), lo_(lo), hi_(hi) {
        counts_.assign(static_cast<std::size_t>(columns), std::vector<std::size_t>(static_cast<std::size_t>(hi - lo + 1)));
    }

    int columns() const { return columns_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool in_range(int s, int t) const { return s >= 0 && s < columns_ && t >= lo_ && t <= hi_; }
    std::size_t count(int s, int t) const {
        return counts_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo_)];
    }

    /// Largest rank of X^n_t = sum_j C(n, j) rank N^j_t after adding `extra` generators.
    std::size_t level_rank_with(const std::vector<std::pair<int, int>>& extra) const {
        auto c = counts_;
        for (auto [s, t] : extra) ++c[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo_)];
        std::size_t worst = 0;
        for (int n = 0; n < columns_; ++n)
            for (int t = lo_; t <= hi_; ++t) {
                std::size_t r = 0;
                for (int j = 0; j <= n; ++j)
                    r += binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j)) *
                         c[static_cast<std::size_t>(j)][static_cast<std::size_t>(t - lo_)];
                worst = std::max(worst, r);
            }
        return worst;
    }

    std::size_t add(int s, int t) {
        gens_.push_back({s, t, count(s, t)});
        ++counts_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo_)];
        return gens_.size() - 1;
    }
    void vertical(std::size_t from, std::size_t to, long long k) { rel_.push_back({false, from, to, k}); }
    void horizontal(std::size_t from, std::size_t to, long long k) { rel_.push_back({true, from, to, k}); }

    DoubleComplex build() const {
        DoubleComplex d;
        d.lo = lo_;
        d.hi = hi_;
        d.ranks = counts_;
        d.vertical.resize(static_cast<std::size_t>(columns_));
        d.horizontal.resize(static_cast<std::size_t>(columns_ - 1));
        for (int s = 0; s < columns_; ++s)
            for (int t = lo_; t <= hi_; ++t) {
                d.vertical[static_cast<std::size_t>(s)].emplace_back(t == lo_ ? 0 : d.rank(s, t - 1), d.rank(s, t));
                if (s + 1 < columns_)
                    d.horizontal[static_cast<std::size_t>(s)].emplace_back(d.rank(s + 1, t), d.rank(s, t));
            }
        for (const auto& r : rel_) {
            const auto& a = gens_[r.from];
            const auto& b = gens_[r.to];
            auto& m = r.horizontal ? d.horizontal[static_cast<std::size_t>(a.s)][static_cast<std::size_t>(a.t - lo_)]
                                   : d.vertical[static_cast<std::size_t>(a.s)][static_cast<std::size_t>(a.t - lo_)];
            m(b.index, a.index) += r.k;
        }
        return d;
    }

private:
    struct Gen {
        int s, t;
        std::size_t index;
    };
    struct Rel {
        bool horizontal;
        std::size_t from, to;
        long long k;
    };
    int columns_, lo_, hi_;
    std::vector<std::vector<std::size_t>> counts_;
    std::vector<Gen> gens_;
    std::vector<Rel> rel_;
};

/// Change of basis u per (s, t): d' = u d u^-1, delta' = u delta u^-1.
inline DoubleComplex conjugate_double(std::mt19937& rng, const DoubleComplex& d) {
    std::vector<std::vector<Matrix>> u, inv;
    for (int s = 0; s < d.columns(); ++s) {
        u.emplace_back();
        inv.emplace_back();
        for (int t = d.lo; t <= d.hi; ++t) {
            u.back().push_back(random_unimodular(rng, d.rank(s, t)));
            inv.back().push_back(unimodular_inverse(u.back().back()));
        }
    }
    auto at = [&](const std::vector<std::vector<Matrix>>& m, int s, int t) -> const Matrix& {
        return m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - d.lo)];
    };
    DoubleComplex out = d;
    for (int s = 0; s < d.columns(); ++s)
        for (int t = d.lo; t <= d.hi; ++t) {
            if (t > d.lo)
                out.vertical[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - d.lo)] =
                    at(u, s, t - 1) * d.d(s, t) * at(inv, s, t);
            if (s + 1 < d.columns())
                out.horizontal[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - d.lo)] =
                    at(u, s + 1, t) * d.delta(s, t) * at(inv, s, t);
        }
    return out;
}

/// Random double complex assembled from elementary blocks: single
/// generators, vertical and horizontal pairs with multiplier, commuting
/// squares, and zigzags that carry a d_r with r >= 2.
inline DoubleComplex random_double_complex(std::mt19937& rng, int truncation, const CorpusOptions& opt = {}) {
    const int lo = opt.min_degree + static_cast<int>(rng() % 3);
    const int hi = std::min(opt.max_degree, lo + 1 + static_cast<int>(rng() % 4));
    DoubleComplexBuilder b(truncation + 1, lo, hi);
    auto pick = [&](int a, int z) { return a + static_cast<int>(rng() % static_cast<unsigned>(z - a + 1)); };
    auto mult = [&] { return static_cast<long long>(1 + rng() % 3); };
    const auto limit = static_cast<std::size_t>(opt.max_level_rank);
    for (int attempt = 0; attempt < 14; ++attempt) {
        const int kind = static_cast<int>(rng() % 5);
        const int s = pick(0, truncation), t = pick(lo, hi);
        std::vector<std::pair<int, int>> cells;
        switch (kind) {
        case 0: cells = {{s, t}}; break;
        case 1: cells = {{s, t}, {s, t - 1}}; break;
        case 2: cells = {{s, t}, {s + 1, t}}; break;
        case 3: cells = {{s, t}, {s, t - 1}, {s + 1, t}, {s + 1, t - 1}}; break;
        default: {
            const int len = 1 + static_cast<int>(rng() % 2);
            cells = {{s, t}};
            for (int i = 1; i <= len; ++i) {
                cells.push_back({s + i, t + i - 1});
                cells.push_back({s + i, t + i});
            }
            cells.push_back({s + len + 1, t + len});
        }
        }
        bool ok = true;
        for (auto [cs, ct] : cells) ok = ok && b.in_range(cs, ct);
        if (!ok || b.level_rank_with(cells) > limit) continue;
        std::vector<std::size_t> g;
        for (auto [cs, ct] : cells) g.push_back(b.add(cs, ct));
        switch (kind) {
        case 1: b.vertical(g[0], g[1], mult()); break;
        case 2: b.horizontal(g[0], g[1], 1 + static_cast<long long>(rng() % 2)); break;
        case 3: {
            const long long k = mult();
            b.vertical(g[0], g[1], 1);
            b.horizontal(g[0], g[2], 1);
            b.horizontal(g[1], g[3], k);
            b.vertical(g[2], g[3], k);
            break;
        }
        case 4: {
            // x, then (w_i, y_i) pairs, then u: delta x = w_1, d y_i = w_i,
            // delta y_i = w_{i+1}, delta y_len = k u.
            const std::size_t len = (g.size() - 2) / 2;
            b.horizontal(g[0], g[1], 1);
            for (std::size_t i = 0; i < len; ++i) {
                const std::size_t w = 1 + 2 * i, y = 2 + 2 * i;
                b.vertical(g[y], g[w], 1);
                b.horizontal(g[y], i + 1 < len ? g[w + 2] : g.back(), i + 1 < len ? 1 : mult());
            }
            break;
        }
        default: break;
        }
    }
    return conjugate_double(rng, b.build());
}

/// Double complex whose columns are all acyclic: vertical unit pairs and unit squares.
inline DoubleComplex acyclic_double_complex(std::mt19937& rng, int truncation, int lo, int hi) {
    DoubleComplexBuilder b(truncation + 1, lo, hi);
    for (int attempt = 0; attempt < 6; ++attempt) {
        const int s = static_cast<int>(rng() % static_cast<unsigned>(truncation + 1));
        const int t = lo + 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, hi - lo)));
        if (rng() % 2 == 0 || s == truncation) {
            if (!b.in_range(s, t) || !b.in_range(s, t - 1)) continue;
            const auto x = b.add(s, t), y = b.add(s, t - 1);
            b.vertical(x, y, 1);
        } else {
            if (!b.in_range(s, t) || !b.in_range(s, t - 1)) continue;
            const auto x = b.add(s, t), a = b.add(s, t - 1), c = b.add(s + 1, t), e = b.add(s + 1, t - 1);
            b.vertical(x, a, 1);
            b.horizontal(x, c, 1);
            b.horizontal(a, e, 1);
            b.vertical(c, e, 1);
        }
    }
    return conjugate_double(rng, b.build());
}

/// Inclusion of the first summand X -> X + Y (degree ranges as in direct_sum).
inline CosimplicialMap first_summand_inclusion(const CosimplicialChain& x, const CosimplicialChain& sum) {
    CosimplicialMap f;
    for (int s = 0; s <= x.truncation(); ++s) {
        LevelMap m;
        for (int t = sum.lo(); t <= sum.hi(); ++t) {
            Matrix a(sum.rank(s, t), t >= x.lo() && t <= x.hi() ? x.rank(s, t) : 0);
            for (std::size_t i = 0; i < a.cols(); ++i) a(i, i) = 1;
            m.push_back(std::move(a));
        }
        f.components.push_back(std::move(m));
    }
    return f;
}

/// Projection X + Y -> X onto the first summand, with X widened to the sum's range.
inline CosimplicialMap first_summand_projection(const CosimplicialChain& x, const CosimplicialChain& sum) {
    CosimplicialMap f;
    for (int s = 0; s <= x.truncation(); ++s) {
        LevelMap m;
        for (int t = sum.lo(); t <= sum.hi(); ++t) {
            Matrix a(t >= x.lo() && t <= x.hi() ? x.rank(s, t) : 0, sum.rank(s, t));
            for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) = 1;
            m.push_back(std::move(a));
        }
        f.components.push_back(std::move(m));
    }
    return f;
}

/// The cosimplicial object with basis changed by u, and u itself as an isomorphism X -> conjugate.
inline std::pair<CosimplicialChain, CosimplicialMap> random_isomorph(std::mt19937& rng, const CosimplicialChain& x) {
    CosimplicialMap f;
    for (int s = 0; s <= x.truncation(); ++s) {
        f.components.emplace_back();
        for (int t = x.lo(); t <= x.hi(); ++t) f.components.back().push_back(random_unimodular(rng, x.rank(s, t), 4));
    }
    return {conjugate(x, f.components), f};
}

/// Random per-level, per-degree unimodular change of basis of X.
inline CosimplicialChain scramble(std::mt19937& rng, const CosimplicialChain& x) {
    std::vector<std::vector<Matrix>> u;
    for (int s = 0; s <= x.truncation(); ++s) {
        u.emplace_back();
        for (int t = x.lo(); t <= x.hi(); ++t) u.back().push_back(random_unimodular(rng, x.rank(s, t), 4));
    }
    return conjugate(x, u);
}

inline CosimplicialChain random_cosimplicial(std::mt19937& rng, int truncation, const CorpusOptions& opt = {}) {
    return scramble(rng, dold_kan(random_double_complex(rng, truncation, opt)));
}

/// The fixed-seed corpus used by the unit and acceptance tests: truncations
/// 1..5 with more weight on 2..4, where blocks have room.
inline std::vector<CosimplicialChain> cosimplicial_corpus(std::size_t size, unsigned seed = 2024) {
    std::mt19937 rng(seed);
    static const int truncations[] = {1, 2, 3, 4, 2, 3, 4, 5, 3, 2};
    std::vector<CosimplicialChain> out;
    for (std::size_t i = 0; i < size; ++i) out.push_back(random_cosimplicial(rng, truncations[i % 10]));
    return out;
}

} // namespace partot::testing
