#include "partot/cosimplicial.hpp"

#include "partot/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace partot {

namespace {

std::string where(int level, int t) { return "level " + std::to_string(level) + ", degree " + std::to_string(t); }

void check_map_shapes(const LevelMap& f, const ChainComplexInt& source, const ChainComplexInt& target, int lo, int hi,
                      const std::string& name) {
    if (f.size() != static_cast<std::size_t>(hi - lo + 1))
        throw InputError(name + ": expected " + std::to_string(hi - lo + 1) + " matrices, got " +
                         std::to_string(f.size()));
    for (int t = lo; t <= hi; ++t) {
        const Matrix& m = f[static_cast<std::size_t>(t - lo)];
        if (m.rows() != target.rank(t) || m.cols() != source.rank(t))
            throw InputError(name + ": matrix in degree " + std::to_string(t) + " is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()) + ", expected " + std::to_string(target.rank(t)) + "x" +
                             std::to_string(source.rank(t)));
    }
}

ChainComplexInt sum_complex(const ChainComplexInt& a, const ChainComplexInt& b, int lo, int hi) {
    std::vector<std::size_t> ranks;
    std::vector<Matrix> bd;
    for (int t = lo; t <= hi; ++t) {
        ranks.push_back(a.rank(t) + b.rank(t));
        if (t == lo)
            bd.emplace_back(0, ranks.back());
        else
            bd.push_back(block_diagonal(a.boundary_dense(t), b.boundary_dense(t)));
    }
    if (ranks.empty()) return ChainComplexInt::zero(lo, hi);
    return ChainComplexInt(lo, std::move(ranks), bd);
}

// Monotone map [n] -> [n+1] missing i.
std::vector<int> coface_map_values(int n, int i) {
    std::vector<int> v;
    for (int a = 0; a <= n; ++a) v.push_back(a < i ? a : a + 1);
    return v;
}

// Monotone map [n] -> [n-1] hitting j twice.
std::vector<int> codegeneracy_map_values(int n, int j) {
    std::vector<int> v;
    for (int a = 0; a <= n; ++a) v.push_back(a <= j ? a : a - 1);
    return v;
}

} // namespace

ChainComplexInt pad_complex(const ChainComplexInt& c, int lo, int hi) {
    if (c.ranks().empty() || std::all_of(c.ranks().begin(), c.ranks().end(), [](std::size_t r) { return r == 0; }))
        return ChainComplexInt::zero(lo, hi);
    if (c.lo() < lo || c.hi() > hi)
        throw InputError("complex with degrees " + std::to_string(c.lo()) + ".." + std::to_string(c.hi()) +
                         " does not fit in " + std::to_string(lo) + ".." + std::to_string(hi));
    if (c.lo() == lo && c.hi() == hi) return c;
    std::vector<std::size_t> ranks;
    std::vector<SparseMatrix> bd;
    for (int t = lo; t <= hi; ++t) {
        ranks.push_back(c.rank(t));
        bd.push_back(t == lo ? SparseMatrix(0, c.rank(t)) : c.boundary(t));
    }
    return ChainComplexInt(lo, std::move(ranks), std::move(bd));
}

CosimplicialChain::CosimplicialChain(std::vector<ChainComplexInt> levels, std::vector<std::vector<LevelMap>> cofaces,
                                     std::vector<std::vector<LevelMap>> codegeneracies) {
    if (levels.empty()) throw InputError("a cosimplicial object needs at least level 0");
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& c : levels) {
        if (c.ranks().empty()) continue;
        lo = any ? std::min(lo, c.lo()) : c.lo();
        hi = any ? std::max(hi, c.hi()) : c.hi();
        any = true;
    }
    *this = CosimplicialChain(lo, hi, std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

CosimplicialChain::CosimplicialChain(int lo, int hi, std::vector<ChainComplexInt> levels,
                                     std::vector<std::vector<LevelMap>> cofaces,
                                     std::vector<std::vector<LevelMap>> codegeneracies)
    : lo_(lo), hi_(hi) {
    if (levels.empty()) throw InputError("a cosimplicial object needs at least level 0");
    if (hi < lo - 1) throw InputError("degree range is malformed");
    for (auto& c : levels) c = pad_complex(c, lo, hi);
    const std::size_t m = levels.size() - 1;
    if (cofaces.size() != m)
        throw InputError("expected cofaces out of levels 0.." + std::to_string(static_cast<int>(m) - 1));
    if (codegeneracies.size() != m)
        throw InputError("expected codegeneracies out of levels 1.." + std::to_string(m));
    for (std::size_t k = 0; k < m; ++k) {
        if (cofaces[k].size() != k + 2)
            throw InputError("level " + std::to_string(k) + " needs " + std::to_string(k + 2) + " cofaces");
        for (std::size_t i = 0; i < cofaces[k].size(); ++i)
            check_map_shapes(cofaces[k][i], levels[k], levels[k + 1], lo, hi,
                             "coface d^" + std::to_string(i) + " out of level " + std::to_string(k));
        if (codegeneracies[k].size() != k + 1)
            throw InputError("level " + std::to_string(k + 1) + " needs " + std::to_string(k + 1) + " codegeneracies");
        for (std::size_t j = 0; j < codegeneracies[k].size(); ++j)
            check_map_shapes(codegeneracies[k][j], levels[k + 1], levels[k], lo, hi,
                             "codegeneracy s^" + std::to_string(j) + " out of level " + std::to_string(k + 1));
    }
    levels_ = std::move(levels);
    cofaces_ = std::move(cofaces);
    codegeneracies_ = std::move(codegeneracies);
}

const LevelMap& CosimplicialChain::coface_map(int k, int i) const {
    return cofaces_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i));
}

const LevelMap& CosimplicialChain::codegeneracy_map(int k, int j) const {
    return codegeneracies_.at(static_cast<std::size_t>(k - 1)).at(static_cast<std::size_t>(j));
}

const Matrix& CosimplicialChain::coface(int k, int i, int t) const {
    return coface_map(k, i).at(static_cast<std::size_t>(t - lo_));
}

const Matrix& CosimplicialChain::codegeneracy(int k, int j, int t) const {
    return codegeneracy_map(k, j).at(static_cast<std::size_t>(t - lo_));
}

ValidationReport validate_cosimplicial(const CosimplicialChain& x) {
    ValidationReport report;
    const int m = x.truncation(), lo = x.lo(), hi = x.hi();
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };
    auto d = [&](int k, int i, int t) -> const Matrix& { return x.coface(k, i, t); };
    auto s = [&](int k, int j, int t) -> const Matrix& { return x.codegeneracy(k, j, t); };

    // Chain-map conditions.
    for (int k = 0; k < m; ++k)
        for (int t = lo + 1; t <= hi; ++t) {
            const Matrix bk = x.level(k).boundary_dense(t), bk1 = x.level(k + 1).boundary_dense(t);
            for (int i = 0; i <= k + 1; ++i)
                if (!(bk1 * d(k, i, t) == d(k, i, t - 1) * bk))
                    fail("coface d^" + std::to_string(i) + " out of " + where(k, t) + " does not commute with the boundary");
            for (int j = 0; j <= k; ++j)
                if (!(bk * s(k + 1, j, t) == s(k + 1, j, t - 1) * bk1))
                    fail("codegeneracy s^" + std::to_string(j) + " out of " + where(k + 1, t) +
                         " does not commute with the boundary");
        }

    for (int t = lo; t <= hi; ++t) {
        // d^j d^i = d^i d^{j-1}, i < j, on X^k.
        for (int k = 0; k + 2 <= m; ++k)
            for (int j = 1; j <= k + 2; ++j)
                for (int i = 0; i < j; ++i)
                    if (!(d(k + 1, j, t) * d(k, i, t) == d(k + 1, i, t) * d(k, j - 1, t)))
                        fail("d^j d^i = d^i d^(j-1) fails on " + where(k, t) + " for i=" + std::to_string(i) +
                             ", j=" + std::to_string(j));
        // s^j s^i = s^i s^{j+1}, i <= j, on X^k.
        for (int k = 2; k <= m; ++k)
            for (int j = 0; j <= k - 2; ++j)
                for (int i = 0; i <= j; ++i)
                    if (!(s(k - 1, j, t) * s(k, i, t) == s(k - 1, i, t) * s(k, j + 1, t)))
                        fail("s^j s^i = s^i s^(j+1) fails on " + where(k, t) + " for i=" + std::to_string(i) +
                             ", j=" + std::to_string(j));
        // s^j d^i on X^k.
        for (int k = 0; k + 1 <= m; ++k)
            for (int j = 0; j <= k; ++j)
                for (int i = 0; i <= k + 1; ++i) {
                    const Matrix lhs = s(k + 1, j, t) * d(k, i, t);
                    const std::string tag =
                        " fails on " + where(k, t) + " for i=" + std::to_string(i) + ", j=" + std::to_string(j);
                    if (i < j) {
                        if (!(lhs == d(k - 1, i, t) * s(k, j - 1, t))) fail("s^j d^i = d^i s^(j-1)" + tag);
                    } else if (i == j || i == j + 1) {
                        if (!lhs.is_identity()) fail("s^j d^i = id" + tag);
                    } else if (!(lhs == d(k - 1, i - 1, t) * s(k, j, t))) {
                        fail("s^j d^i = d^(i-1) s^j" + tag);
                    }
                }
    }
    return report;
}

std::string cosimplicial_map_defect(const CosimplicialMap& f, const CosimplicialChain& x, const CosimplicialChain& y) {
    if (x.truncation() != y.truncation()) throw InputError("source and target have different truncations");
    if (x.lo() != y.lo() || x.hi() != y.hi()) throw InputError("source and target have different degree ranges");
    if (f.components.size() != static_cast<std::size_t>(x.truncation() + 1))
        throw InputError("map needs one component per level");
    const int lo = x.lo(), hi = x.hi();
    for (int k = 0; k <= x.truncation(); ++k)
        check_map_shapes(f.components[static_cast<std::size_t>(k)], x.level(k), y.level(k), lo, hi,
                         "map component on level " + std::to_string(k));
    auto fk = [&](int k, int t) -> const Matrix& {
        return f.components[static_cast<std::size_t>(k)][static_cast<std::size_t>(t - lo)];
    };
    for (int k = 0; k <= x.truncation(); ++k)
        for (int t = lo + 1; t <= hi; ++t)
            if (!(y.level(k).boundary_dense(t) * fk(k, t) == fk(k, t - 1) * x.level(k).boundary_dense(t)))
                return "component on " + where(k, t) + " does not commute with the boundary";
    for (int k = 0; k < x.truncation(); ++k)
        for (int t = lo; t <= hi; ++t) {
            for (int i = 0; i <= k + 1; ++i)
                if (!(y.coface(k, i, t) * fk(k, t) == fk(k + 1, t) * x.coface(k, i, t)))
                    return "map does not commute with d^" + std::to_string(i) + " on " + where(k, t);
            for (int j = 0; j <= k; ++j)
                if (!(y.codegeneracy(k + 1, j, t) * fk(k + 1, t) == fk(k, t) * x.codegeneracy(k + 1, j, t)))
                    return "map does not commute with s^" + std::to_string(j) + " on " + where(k + 1, t);
        }
    return {};
}

std::size_t DoubleComplex::rank(int s, int t) const {
    if (s < 0 || s >= columns() || t < lo || t > hi) return 0;
    return ranks[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo)];
}

Matrix DoubleComplex::d(int s, int t) const {
    if (s < 0 || s >= columns() || t <= lo || t > hi) return Matrix(rank(s, t - 1), rank(s, t));
    return vertical[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo)];
}

Matrix DoubleComplex::delta(int s, int t) const {
    if (s < 0 || s + 1 >= columns() || t < lo || t > hi) return Matrix(rank(s + 1, t), rank(s, t));
    return horizontal[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo)];
}

ChainComplexInt DoubleComplex::column(int s) const {
    std::vector<std::size_t> r;
    std::vector<Matrix> bd;
    for (int t = lo; t <= hi; ++t) {
        r.push_back(rank(s, t));
        bd.push_back(t == lo ? Matrix(0, rank(s, t)) : d(s, t));
    }
    if (r.empty()) return ChainComplexInt::zero(lo, hi);
    return ChainComplexInt(lo, std::move(r), bd);
}

void DoubleComplex::validate() const {
    const auto width = static_cast<std::size_t>(std::max(0, hi - lo + 1));
    if (ranks.empty()) throw InvariantError("double complex has no columns");
    if (vertical.size() != ranks.size()) throw InvariantError("double complex: one vertical map list per column");
    if (horizontal.size() + 1 != ranks.size()) throw InvariantError("double complex: one horizontal list per gap");
    for (int s = 0; s < columns(); ++s) {
        const auto su = static_cast<std::size_t>(s);
        if (ranks[su].size() != width || vertical[su].size() != width)
            throw InvariantError("double complex: column " + std::to_string(s) + " has the wrong length");
        if (su < horizontal.size() && horizontal[su].size() != width)
            throw InvariantError("double complex: horizontal maps out of column " + std::to_string(s) +
                                 " have the wrong length");
        for (int t = lo; t <= hi; ++t) {
            const Matrix& v = vertical[su][static_cast<std::size_t>(t - lo)];
            if (v.rows() != rank(s, t - 1) || v.cols() != rank(s, t))
                throw InvariantError("double complex: vertical map at " + where(s, t) + " has the wrong shape");
            if (su < horizontal.size()) {
                const Matrix& h = horizontal[su][static_cast<std::size_t>(t - lo)];
                if (h.rows() != rank(s + 1, t) || h.cols() != rank(s, t))
                    throw InvariantError("double complex: horizontal map at " + where(s, t) + " has the wrong shape");
            }
        }
    }
    for (int s = 0; s < columns(); ++s)
        for (int t = lo; t <= hi; ++t) {
            if (!(d(s, t - 1) * d(s, t)).is_zero())
                throw InvariantError("double complex: d d != 0 at " + where(s, t));
            if (!(delta(s + 1, t) * delta(s, t)).is_zero())
                throw InvariantError("double complex: delta delta != 0 at " + where(s, t));
            if (!(delta(s, t - 1) * d(s, t) == d(s + 1, t) * delta(s, t)))
                throw InvariantError("double complex: delta d != d delta at " + where(s, t));
        }
}

Conormalization conormalize(const CosimplicialChain& x) {
    const auto report = validate_cosimplicial(x);
    if (!report.ok) throw PreconditionError("not a cosimplicial object: " + report.violations.front());
    const int m = x.truncation(), lo = x.lo(), hi = x.hi();
    const auto width = static_cast<std::size_t>(std::max(0, hi - lo + 1));

    std::vector<std::vector<Lattice>> pieces(static_cast<std::size_t>(m + 1));
    for (int s = 0; s <= m; ++s)
        for (int t = lo; t <= hi; ++t) {
            const std::size_t n = x.rank(s, t);
            if (s == 0) {
                pieces[0].push_back(Lattice::full(n));
                continue;
            }
            std::vector<Matrix> rows;
            for (int j = 0; j < s; ++j) rows.push_back(x.codegeneracy(s, j, t));
            pieces[static_cast<std::size_t>(s)].push_back(kernel(vstack(rows, n)));
        }
    auto piece = [&](int s, int t) -> const Lattice& {
        return pieces[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo)];
    };

    Conormalization out;
    auto& n = out.n;
    n.lo = lo;
    n.hi = hi;
    n.ranks.assign(static_cast<std::size_t>(m + 1), std::vector<std::size_t>(width));
    n.vertical.assign(static_cast<std::size_t>(m + 1), {});
    n.horizontal.assign(static_cast<std::size_t>(m), {});
    out.basis.assign(static_cast<std::size_t>(m + 1), {});
    for (int s = 0; s <= m; ++s)
        for (int t = lo; t <= hi; ++t) {
            const auto su = static_cast<std::size_t>(s);
            const Lattice& here = piece(s, t);
            n.ranks[su][static_cast<std::size_t>(t - lo)] = here.rank();
            out.basis[su].push_back(here.basis());
            if (t == lo) {
                n.vertical[su].emplace_back(0, here.rank());
            } else {
                const Matrix image = x.level(s).boundary_dense(t) * here.basis();
                n.vertical[su].push_back(piece(s, t - 1).coordinates(image));
            }
            if (s < m) {
                Matrix delta(x.rank(s + 1, t), x.rank(s, t));
                for (int i = 0; i <= s + 1; ++i)
                    delta = delta + Integer(i % 2 == 0 ? 1 : -1) * x.coface(s, i, t);
                const Matrix image = delta * here.basis();
                if (!piece(s + 1, t).contains(image))
                    throw InvariantError("alternating coface sum leaves the conormalized piece at " + where(s, t));
                n.horizontal[su].push_back(piece(s + 1, t).coordinates(image));
            }
        }
    n.validate();
    return out;
}

std::vector<std::vector<int>> surjections_from(int n) {
    std::vector<std::vector<int>> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> cur{0};
        std::function<void()> grow = [&] {
            if (static_cast<int>(cur.size()) == n + 1) {
                if (cur.back() == k) out.push_back(cur);
                return;
            }
            for (int step = 0; step <= 1; ++step) {
                if (cur.back() + step > k) continue;
                cur.push_back(cur.back() + step);
                grow();
                cur.pop_back();
            }
        };
        grow();
    }
    return out;
}

CosimplicialChain dold_kan(const DoubleComplex& dc) {
    dc.validate();
    const int m = dc.columns() - 1, lo = dc.lo, hi = dc.hi;
    std::vector<std::vector<std::vector<int>>> surj;
    std::vector<std::map<std::vector<int>, std::size_t>> surj_index(static_cast<std::size_t>(m + 1));
    // offsets[n][t - lo][tau]
    std::vector<std::vector<std::vector<std::size_t>>> offsets;
    std::vector<ChainComplexInt> levels;
    for (int n = 0; n <= m; ++n) {
        surj.push_back(surjections_from(n));
        const auto& ss = surj.back();
        for (std::size_t i = 0; i < ss.size(); ++i) surj_index[static_cast<std::size_t>(n)][ss[i]] = i;
        offsets.emplace_back();
        std::vector<std::size_t> ranks;
        for (int t = lo; t <= hi; ++t) {
            std::vector<std::size_t> off;
            std::size_t total = 0;
            for (const auto& tau : ss) {
                off.push_back(total);
                total += dc.rank(tau.back(), t);
            }
            offsets.back().push_back(std::move(off));
            ranks.push_back(total);
        }
        std::vector<Matrix> bd;
        for (int t = lo; t <= hi; ++t) {
            Matrix b(t == lo ? 0 : ranks[static_cast<std::size_t>(t - 1 - lo)], ranks[static_cast<std::size_t>(t - lo)]);
            if (t > lo)
                for (std::size_t i = 0; i < ss.size(); ++i)
                    b.set_block(offsets.back()[static_cast<std::size_t>(t - 1 - lo)][i],
                                offsets.back()[static_cast<std::size_t>(t - lo)][i], dc.d(ss[i].back(), t));
            bd.push_back(std::move(b));
        }
        levels.push_back(ranks.empty() ? ChainComplexInt::zero(lo, hi) : ChainComplexInt(lo, ranks, bd));
    }

    // X(theta) : X^n -> X^n2.
    auto induced = [&](int n, int n2, const std::vector<int>& theta) {
        LevelMap f;
        for (int t = lo; t <= hi; ++t) {
            const auto tu = static_cast<std::size_t>(t - lo);
            Matrix out(levels[static_cast<std::size_t>(n2)].rank(t), levels[static_cast<std::size_t>(n)].rank(t));
            const auto& targets = surj[static_cast<std::size_t>(n2)];
            for (std::size_t si = 0; si < targets.size(); ++si) {
                const auto& sigma = targets[si];
                std::vector<int> phi;
                for (int a : theta) phi.push_back(sigma[static_cast<std::size_t>(a)]);
                std::vector<int> image = phi;
                image.erase(std::unique(image.begin(), image.end()), image.end());
                std::vector<int> rho;
                for (int v : phi)
                    rho.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
                const int k = static_cast<int>(image.size()) - 1, k2 = sigma.back();
                const std::size_t ti = surj_index[static_cast<std::size_t>(n)].at(rho);
                const std::size_t row = offsets[static_cast<std::size_t>(n2)][tu][si];
                const std::size_t col = offsets[static_cast<std::size_t>(n)][tu][ti];
                if (k == k2) {
                    out.set_block(row, col, Matrix::identity(dc.rank(k, t)));
                } else if (k2 == k + 1 && image.front() == 1) {
                    out.set_block(row, col, dc.delta(k, t));
                }
            }
            f.push_back(std::move(out));
        }
        return f;
    };

    std::vector<std::vector<LevelMap>> cofaces(static_cast<std::size_t>(m)), codegeneracies(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i <= k + 1; ++i)
            cofaces[static_cast<std::size_t>(k)].push_back(induced(k, k + 1, coface_map_values(k, i)));
        for (int j = 0; j <= k; ++j)
            codegeneracies[static_cast<std::size_t>(k)].push_back(induced(k + 1, k, codegeneracy_map_values(k + 1, j)));
    }
    return CosimplicialChain(lo, hi, std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

CosimplicialChain constant_object(const ChainComplexInt& c, int truncation) {
    if (truncation < 0) throw InputError("truncation must be nonnegative");
    const auto id = ChainMap::identity(c).components;
    std::vector<ChainComplexInt> levels(static_cast<std::size_t>(truncation + 1), c);
    std::vector<std::vector<LevelMap>> cofaces, codegeneracies;
    for (int k = 0; k < truncation; ++k) {
        cofaces.emplace_back(static_cast<std::size_t>(k + 2), id);
        codegeneracies.emplace_back(static_cast<std::size_t>(k + 1), id);
    }
    return CosimplicialChain(c.lo(), c.hi(), std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

CosimplicialChain cech_object(std::size_t points, int truncation) {
    if (points == 0) throw InputError("the Cech object needs a nonempty set");
    if (truncation < 0) throw InputError("truncation must be nonnegative");
    // Tuples of length k+1 are numbered in base `points`, first coordinate most significant.
    auto count = [&](int k) {
        std::size_t c = 1;
        for (int i = 0; i <= k; ++i) c *= points;
        return c;
    };
    auto digits = [&](std::size_t code, int k) {
        std::vector<std::size_t> v(static_cast<std::size_t>(k + 1));
        for (int i = k; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = code % points;
            code /= points;
        }
        return v;
    };
    auto encode = [&](const std::vector<std::size_t>& v) {
        std::size_t code = 0;
        for (auto d : v) code = code * points + d;
        return code;
    };
    std::vector<ChainComplexInt> levels;
    for (int k = 0; k <= truncation; ++k) levels.push_back(ChainComplexInt(0, {count(k)}, std::vector<Matrix>{Matrix(0, count(k))}));
    std::vector<std::vector<LevelMap>> cofaces(static_cast<std::size_t>(truncation)),
        codegeneracies(static_cast<std::size_t>(truncation));
    for (int k = 0; k < truncation; ++k) {
        for (int i = 0; i <= k + 1; ++i) {
            Matrix d(count(k + 1), count(k));
            for (std::size_t y = 0; y < count(k + 1); ++y) {
                auto v = digits(y, k + 1);
                v.erase(v.begin() + i);
                d(y, encode(v)) = 1;
            }
            cofaces[static_cast<std::size_t>(k)].push_back({d});
        }
        for (int j = 0; j <= k; ++j) {
            Matrix s(count(k), count(k + 1));
            for (std::size_t y = 0; y < count(k); ++y) {
                auto v = digits(y, k);
                v.insert(v.begin() + j, v[static_cast<std::size_t>(j)]);
                s(y, encode(v)) = 1;
            }
            codegeneracies[static_cast<std::size_t>(k)].push_back({s});
        }
    }
    return CosimplicialChain(0, 0, std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

CosimplicialChain conjugate(const CosimplicialChain& x, const std::vector<std::vector<Matrix>>& u) {
    const int m = x.truncation(), lo = x.lo(), hi = x.hi();
    if (u.size() != static_cast<std::size_t>(m + 1)) throw InputError("change of basis needs one entry per level");
    std::vector<std::vector<Matrix>> inv(u.size());
    for (int s = 0; s <= m; ++s) {
        const auto& us = u[static_cast<std::size_t>(s)];
        if (us.size() != static_cast<std::size_t>(hi - lo + 1))
            throw InputError("change of basis needs one matrix per degree");
        for (int t = lo; t <= hi; ++t) {
            const Matrix& a = us[static_cast<std::size_t>(t - lo)];
            if (a.rows() != x.rank(s, t) || a.cols() != x.rank(s, t))
                throw InputError("change of basis at " + where(s, t) + " has the wrong shape");
            inv[static_cast<std::size_t>(s)].push_back(unimodular_inverse(a));
        }
    }
    auto uu = [&](int s, int t) -> const Matrix& { return u[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo)]; };
    auto ui = [&](int s, int t) -> const Matrix& {
        return inv[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - lo)];
    };
    std::vector<ChainComplexInt> levels;
    for (int s = 0; s <= m; ++s) {
        std::vector<Matrix> bd;
        for (int t = lo; t <= hi; ++t)
            bd.push_back(t == lo ? Matrix(0, x.rank(s, t)) : uu(s, t - 1) * x.level(s).boundary_dense(t) * ui(s, t));
        levels.push_back(hi < lo ? x.level(s) : ChainComplexInt(lo, x.level(s).ranks(), bd));
    }
    std::vector<std::vector<LevelMap>> cofaces(static_cast<std::size_t>(m)), codegeneracies(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i <= k + 1; ++i) {
            LevelMap f;
            for (int t = lo; t <= hi; ++t) f.push_back(uu(k + 1, t) * x.coface(k, i, t) * ui(k, t));
            cofaces[static_cast<std::size_t>(k)].push_back(std::move(f));
        }
        for (int j = 0; j <= k; ++j) {
            LevelMap f;
            for (int t = lo; t <= hi; ++t) f.push_back(uu(k, t) * x.codegeneracy(k + 1, j, t) * ui(k + 1, t));
            codegeneracies[static_cast<std::size_t>(k)].push_back(std::move(f));
        }
    }
    return CosimplicialChain(lo, hi, std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

CosimplicialChain shift(const CosimplicialChain& x, int j) {
    std::vector<ChainComplexInt> levels;
    for (int s = 0; s <= x.truncation(); ++s) levels.push_back(x.level(s).shifted(j));
    return CosimplicialChain(x.lo() + j, x.hi() + j, std::move(levels), x.cofaces(), x.codegeneracies());
}

CosimplicialChain truncate(const CosimplicialChain& x, int m) {
    if (m < 0 || m > x.truncation()) throw InputError("truncation level out of range");
    std::vector<ChainComplexInt> levels;
    for (int s = 0; s <= m; ++s) levels.push_back(x.level(s));
    std::vector<std::vector<LevelMap>> cofaces(x.cofaces().begin(), x.cofaces().begin() + m);
    std::vector<std::vector<LevelMap>> codegeneracies(x.codegeneracies().begin(), x.codegeneracies().begin() + m);
    return CosimplicialChain(x.lo(), x.hi(), std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

CosimplicialChain widen(const CosimplicialChain& x, int lo, int hi) {
    if (lo > x.lo() || hi < x.hi()) throw InputError("widen: new degree range must contain the old one");
    std::vector<ChainComplexInt> levels;
    for (int s = 0; s <= x.truncation(); ++s) levels.push_back(pad_complex(x.level(s), lo, hi));
    auto extend = [&](const LevelMap& f, int source, int target) {
        LevelMap g;
        for (int t = lo; t <= hi; ++t)
            g.push_back(t >= x.lo() && t <= x.hi() ? f[static_cast<std::size_t>(t - x.lo())]
                                                   : Matrix(x.rank(target, t), x.rank(source, t)));
        return g;
    };
    std::vector<std::vector<LevelMap>> cofaces(static_cast<std::size_t>(x.truncation())),
        codegeneracies(static_cast<std::size_t>(x.truncation()));
    for (int k = 0; k < x.truncation(); ++k) {
        for (int i = 0; i <= k + 1; ++i) cofaces[static_cast<std::size_t>(k)].push_back(extend(x.coface_map(k, i), k, k + 1));
        for (int j = 0; j <= k; ++j)
            codegeneracies[static_cast<std::size_t>(k)].push_back(extend(x.codegeneracy_map(k + 1, j), k + 1, k));
    }
    return CosimplicialChain(lo, hi, std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

CosimplicialChain direct_sum(const CosimplicialChain& x, const CosimplicialChain& y) {
    if (x.truncation() != y.truncation()) throw InputError("direct sum needs equal truncations");
    const int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
    const auto a = widen(x, lo, hi), b = widen(y, lo, hi);
    const int m = x.truncation();
    std::vector<ChainComplexInt> levels;
    for (int s = 0; s <= m; ++s) levels.push_back(sum_complex(a.level(s), b.level(s), lo, hi));
    auto sum_map = [&](const LevelMap& f, const LevelMap& g) {
        LevelMap h;
        for (std::size_t i = 0; i < f.size(); ++i) h.push_back(block_diagonal(f[i], g[i]));
        return h;
    };
    std::vector<std::vector<LevelMap>> cofaces(static_cast<std::size_t>(m)), codegeneracies(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i <= k + 1; ++i)
            cofaces[static_cast<std::size_t>(k)].push_back(sum_map(a.coface_map(k, i), b.coface_map(k, i)));
        for (int j = 0; j <= k; ++j)
            codegeneracies[static_cast<std::size_t>(k)].push_back(
                sum_map(a.codegeneracy_map(k + 1, j), b.codegeneracy_map(k + 1, j)));
    }
    return CosimplicialChain(lo, hi, std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

MatchingObject matching_object(const CosimplicialChain& x, int m) {
    if (m < 0 || m + 1 > x.truncation())
        throw InputError("matching object M^" + std::to_string(m) + " needs 0 <= m and m+1 <= truncation");
    const int lo = x.lo(), hi = x.hi();
    std::vector<std::vector<int>> surj;
    for (auto& sigma : surjections_from(m + 1))
        if (sigma.back() <= m) surj.push_back(std::move(sigma));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < surj.size(); ++i) index[surj[i]] = i;

    // X(sigma) : X^{m+1}_t -> X^k_t, factoring sigma through its first repeated index.
    std::map<std::pair<std::vector<int>, int>, Matrix> memo;
    std::function<Matrix(const std::vector<int>&, int)> act = [&](const std::vector<int>& sigma, int t) -> Matrix {
        const int n = static_cast<int>(sigma.size()) - 1;
        if (sigma.back() == n) return Matrix::identity(x.rank(n, t));
        auto key = std::make_pair(sigma, t);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int a = 0;
        while (sigma[static_cast<std::size_t>(a)] != sigma[static_cast<std::size_t>(a + 1)]) ++a;
        std::vector<int> rest;
        for (int b = 0; b < n; ++b) rest.push_back(sigma[static_cast<std::size_t>(b <= a ? b : b + 1)]);
        Matrix out = act(rest, t) * x.codegeneracy(n, a, t);
        memo.emplace(key, out);
        return out;
    };

    MatchingObject out;
    out.m = m;
    std::vector<std::size_t> ranks;
    std::vector<std::vector<std::size_t>> offsets;
    for (int t = lo; t <= hi; ++t) {
        std::vector<std::size_t> off;
        std::size_t total = 0;
        for (const auto& sigma : surj) {
            off.push_back(total);
            total += x.rank(sigma.back(), t);
        }
        // Constraints s^j x_sigma = x_{s^j sigma}.
        std::vector<Matrix> rows;
        for (std::size_t i = 0; i < surj.size(); ++i) {
            const int k = surj[i].back();
            for (int j = 0; j < k; ++j) {
                std::vector<int> target;
                for (int v : surj[i]) target.push_back(v <= j ? v : v - 1);
                const std::size_t ti = index.at(target);
                Matrix c(x.rank(k - 1, t), total);
                c.set_block(0, off[i], x.codegeneracy(k, j, t));
                c.set_block(0, off[ti], Integer(-1) * Matrix::identity(x.rank(k - 1, t)));
                rows.push_back(std::move(c));
            }
        }
        out.tuples.push_back(kernel(vstack(rows, total)));
        ranks.push_back(out.tuples.back().rank());
        offsets.push_back(std::move(off));

        std::vector<Matrix> blocks;
        for (const auto& sigma : surj) blocks.push_back(act(sigma, t));
        const Matrix canonical = vstack(blocks, x.rank(m + 1, t));
        out.map.push_back(out.tuples.back().coordinates(canonical));
        out.kernel.push_back(kernel(out.map.back()));
    }
    std::vector<Matrix> bd;
    for (int t = lo; t <= hi; ++t) {
        const auto tu = static_cast<std::size_t>(t - lo);
        if (t == lo) {
            bd.emplace_back(0, ranks[tu]);
            continue;
        }
        const std::size_t total_prev = out.tuples[tu - 1].ambient_dim(), total = out.tuples[tu].ambient_dim();
        Matrix big(total_prev, total);
        for (std::size_t i = 0; i < surj.size(); ++i)
            big.set_block(offsets[tu - 1][i], offsets[tu][i], x.level(surj[i].back()).boundary_dense(t));
        bd.push_back(out.tuples[tu - 1].coordinates(big * out.tuples[tu].basis()));
    }
    out.complex = ranks.empty() ? ChainComplexInt::zero(lo, hi) : ChainComplexInt(lo, ranks, bd);
    return out;
}

} // namespace partot
