#include "partot/spectral_sequence.hpp"

#include "partot/errors.hpp"
#include "partot/totalization.hpp"

#include <algorithm>
#include <tuple>

namespace partot {

namespace {

// Lattices of the filtered complex Tot_M, cached by (r, p, k).
class FilteredTot {
public:
    explicit FilteredTot(const Conormalization& c) : n_(c.n), m_(c.n.columns() - 1), tot_(stripe_complex(c, 0, m_)) {}

    int truncation() const { return m_; }
    std::size_t dim(int k) const { return tot_.rank(k); }
    Matrix d(int k) const { return tot_.boundary_dense(k); }

    Lattice filtration(int p, int k) const {
        const std::size_t n = dim(k);
        if (p <= 0) return Lattice::full(n);
        if (p > m_) return Lattice::zero(n);
        std::size_t off = 0;
        for (int s = 0; s < p; ++s) off += n_.rank(s, k + s);
        return Lattice::coordinate(n, off, n - off);
    }

    const Lattice& z(int r, int p, int k) {
        const auto key = std::make_tuple(r, p, k);
        if (auto it = z_.find(key); it != z_.end()) return it->second;
        Lattice out = filtration(p, k).intersect(preimage(d(k), filtration(p + r, k - 1)));
        return z_.emplace(key, std::move(out)).first->second;
    }

    const Lattice& den(int r, int p, int k) {
        const auto key = std::make_tuple(r, p, k);
        if (auto it = den_.find(key); it != den_.end()) return it->second;
        Lattice out = z(r - 1, p + 1, k) + image(d(k + 1), z(r - 1, p - r + 1, k + 1));
        return den_.emplace(key, std::move(out)).first->second;
    }

private:
    const DoubleComplex& n_;
    int m_;
    ChainComplexInt tot_;
    std::map<std::tuple<int, int, int>, Lattice> z_;
    std::map<std::tuple<int, int, int>, Lattice> den_;
};

std::string at(int r, int s, int t) {
    return "E_" + std::to_string(r) + "^{" + std::to_string(s) + "," + std::to_string(t) + "}";
}

} // namespace

AbelianGroup SpectralPage::at(int s, int t) const {
    auto it = entries.find({s, t});
    return it == entries.end() ? AbelianGroup{} : it->second;
}

const SpectralPage& SpectralSequence::page(int r) const {
    if (r < 1 || r > static_cast<int>(pages.size())) throw InputError("page " + std::to_string(r) + " was not computed");
    return pages[static_cast<std::size_t>(r - 1)];
}

SpectralSequence spectral_sequence(const CosimplicialChain& x, int r_max) {
    if (r_max < 1) throw InputError("spectral sequence needs r_max >= 1");
    const auto c = conormalize(x);
    FilteredTot f(c);
    const int m = x.truncation(), lo = x.lo(), hi = x.hi();
    const int pages = std::max({r_max, m + 1, 2});

    SpectralSequence out;
    out.truncation = m;
    out.lo = lo;
    out.hi = hi;
    for (int r = 1; r <= pages + 1; ++r) {
        SpectralPage page;
        page.r = r;
        for (int s = 0; s <= m; ++s)
            for (int t = lo; t <= hi; ++t) {
                const int k = t - s;
                page.entries[{s, t}] = quotient(f.z(r, s, k), f.den(r, s, k));
                if (r > pages) continue;
                const Lattice& target_den = f.den(r, s + r, k - 1);
                const Lattice img = image(f.d(k), f.z(r, s, k)) + target_den;
                if (!(img == target_den)) page.differentials[{s, t}] = quotient(img, target_den);
            }
        if (r <= pages) {
            out.pages.push_back(std::move(page));
        } else {
            out.e_infinity = page.entries;
        }
    }
    // E_{r+1} against the homology of (E_r, d_r).
    for (int r = 1; r < pages; ++r)
        for (int s = 0; s <= m; ++s)
            for (int t = lo; t <= hi; ++t) {
                const int k = t - s;
                const Lattice cycles = f.z(r, s, k).intersect(preimage(f.d(k), f.den(r, s + r, k - 1)));
                const Lattice bounds = image(f.d(k + 1), f.z(r, s - r, k + 1)) + f.den(r, s, k);
                if (!(quotient(cycles, bounds) == out.page(r + 1).at(s, t))) {
                    out.pages_consistent = false;
                    out.inconsistencies.push_back(at(r + 1, s, t) + " differs from the homology of " + at(r, s, t));
                }
            }
    // Associated graded of H(Tot_M).
    for (int s = 0; s <= m; ++s)
        for (int t = lo; t <= hi; ++t) {
            const int k = t - s;
            const Lattice cycles = kernel(f.d(k));
            const Lattice bounds = image(f.d(k + 1));
            const Lattice num = cycles.intersect(f.filtration(s, k)) + bounds;
            const Lattice den = cycles.intersect(f.filtration(s + 1, k)) + bounds;
            out.graded_homology[{s, t}] = quotient(num, den);
            if (!(out.graded_homology[{s, t}] == out.e_infinity[{s, t}])) out.converges = false;
        }
    if (!out.pages_consistent) throw InvariantError("spectral sequence pages are inconsistent: " + out.inconsistencies.front());
    return out;
}

BigradedGroups e2_from_levelwise_homology(const CosimplicialChain& x) {
    const auto report = validate_cosimplicial(x);
    if (!report.ok) throw PreconditionError("not a cosimplicial object: " + report.violations.front());
    const int m = x.truncation(), lo = x.lo(), hi = x.hi();
    auto cycles = [&](int s, int t) { return kernel(x.level(s).boundary_dense(t)); };
    auto bounds = [&](int s, int t) { return image(x.level(s).boundary_dense(t + 1)); };
    auto delta = [&](int s, int t) {
        Matrix out(x.rank(s + 1, t), x.rank(s, t));
        for (int i = 0; i <= s + 1; ++i) out = out + Integer(i % 2 == 0 ? 1 : -1) * x.coface(s, i, t);
        return out;
    };
    BigradedGroups out;
    for (int t = lo; t <= hi; ++t) {
        std::vector<Lattice> l;
        for (int s = 0; s <= m; ++s) {
            Lattice ls = cycles(s, t);
            for (int j = 0; j < s; ++j) ls = ls.intersect(preimage(x.codegeneracy(s, j, t), bounds(s - 1, t)));
            l.push_back(std::move(ls));
        }
        for (int s = 0; s <= m; ++s) {
            const auto su = static_cast<std::size_t>(s);
            Lattice num = s < m ? l[su].intersect(preimage(delta(s, t), bounds(s + 1, t))) : l[su];
            Lattice den = bounds(s, t);
            if (s > 0) den = den + image(delta(s - 1, t), l[su - 1]);
            out[{s, t}] = quotient(num, den);
        }
    }
    return out;
}

bool differential_range(int s, int r) {
    if (s < 1 || r < 2) throw InputError("differential_range needs s >= 1 and r >= 2");
    return r <= s - 1;
}

FringeReport fringe_filtration_check(const SpectralSequence& ss, int n) {
    FringeReport report;
    report.n = n;
    const int pages = static_cast<int>(ss.pages.size());
    for (int s = std::max(n + 1, 1); s <= ss.truncation; ++s) {
        if (s < ss.lo || s > ss.hi || pages < 2) continue;
        const AbelianGroup e2 = ss.page(2).at(s, s);
        if (e2.is_zero()) continue;
        FringeEntry entry;
        entry.s = s;
        entry.e2 = e2;
        for (int r = 2; r <= pages; ++r) {
            if (ss.page(r).differential_nonzero(s, s)) entry.supports.push_back(r);
            if (s - r >= 0 && ss.page(r).differential_nonzero(s - r, s - r + 1)) entry.hit_by.push_back(r);
        }
        auto it = ss.e_infinity.find({s, s});
        entry.survives = it != ss.e_infinity.end() && !it->second.is_zero();
        for (int r : entry.supports) entry.in_range = entry.in_range && r <= s - 1;
        for (int r : entry.hit_by) entry.in_range = entry.in_range && r <= s - 1;
        report.passed = report.passed && entry.in_range && !entry.survives;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace partot
