#include "partot/lattice.hpp"

#include "partot/errors.hpp"

#include <optional>

namespace partot {

std::string AbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&](const std::string& part) {
        if (!out.empty()) out += " + ";
        out += part;
    };
    if (rank == 1)
        append("Z");
    else if (rank > 1)
        append("Z^" + std::to_string(rank));
    for (const auto& t : torsion) append("Z/" + t.str());
    return out;
}

AbelianGroup AbelianGroup::cokernel(const Matrix& relations) {
    AbelianGroup g;
    const auto inv = smith_invariants(relations);
    g.rank = relations.rows() - inv.size();
    for (const auto& d : inv)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

namespace {

std::optional<Matrix> solve_echelon(const Matrix& basis, const Matrix& vectors) {
    const std::size_t n = basis.rows(), k = basis.cols();
    if (vectors.rows() != n) throw InputError("lattice coordinates: ambient mismatch");
    std::vector<std::size_t> pivots(k);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t r = 0;
        while (r < n && basis(r, c) == 0) ++r;
        pivots[c] = r;
    }
    Matrix coords(k, vectors.cols());
    for (std::size_t v = 0; v < vectors.cols(); ++v) {
        std::vector<Integer> residual(n);
        for (std::size_t i = 0; i < n; ++i) residual[i] = vectors(i, v);
        std::size_t checked = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t pr = pivots[c];
            for (; checked < pr; ++checked)
                if (residual[checked] != 0) return std::nullopt;
            const Integer& piv = basis(pr, c);
            if (residual[pr] % piv != 0) return std::nullopt;
            Integer q = residual[pr] / piv;
            if (q != 0)
                for (std::size_t i = pr; i < n; ++i)
                    if (basis(i, c) != 0) residual[i] -= q * basis(i, c);
            coords(c, v) = std::move(q);
        }
        for (std::size_t i = checked; i < n; ++i)
            if (residual[i] != 0) return std::nullopt;
    }
    return coords;
}

} // namespace

Lattice Lattice::span(const Matrix& generators) {
    Lattice l(generators.rows());
    if (generators.cols() == 0) return l;
    auto ce = column_echelon(generators, false);
    l.basis_ = ce.echelon.columns(0, ce.rank);
    return l;
}

Lattice Lattice::coordinate(std::size_t n, std::size_t first, std::size_t count) {
    Matrix g(n, count);
    for (std::size_t j = 0; j < count; ++j) g(first + j, j) = 1;
    return span(g);
}

bool Lattice::contains(const Matrix& vectors) const { return solve_echelon(basis_, vectors).has_value(); }

bool Lattice::is_saturated() const { return AbelianGroup::cokernel(basis_).is_free(); }

Matrix Lattice::coordinates(const Matrix& vectors) const {
    auto c = solve_echelon(basis_, vectors);
    if (!c) throw InvariantError("vector does not lie in the lattice");
    return *c;
}

Lattice Lattice::operator+(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw InputError("lattice sum: ambient mismatch");
    if (other.rank() == 0) return *this;
    if (rank() == 0) return other;
    return span(hstack(basis_, other.basis_));
}

Lattice Lattice::intersect(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw InputError("lattice intersection: ambient mismatch");
    if (rank() == 0 || other.rank() == 0) return Lattice(ambient_);
    const Lattice k = kernel(hstack(basis_, Integer(-1) * other.basis_));
    return span(basis_ * k.basis().rows_range(0, rank()));
}

Lattice kernel(const Matrix& a) {
    auto ce = column_echelon(a, true);
    return Lattice::span(ce.transform.columns(ce.rank, a.cols() - ce.rank));
}

Lattice image(const Matrix& a) { return Lattice::span(a); }

Lattice image(const Matrix& a, const Lattice& source) {
    if (a.cols() != source.ambient_dim()) throw InputError("image: ambient mismatch");
    return Lattice::span(a * source.basis());
}

Lattice preimage(const Matrix& a, const Lattice& target) {
    if (a.rows() != target.ambient_dim()) throw InputError("preimage: ambient mismatch");
    const Lattice k = kernel(hstack(a, Integer(-1) * target.basis()));
    return Lattice::span(k.basis().rows_range(0, a.cols()));
}

AbelianGroup quotient(const Lattice& numerator, const Lattice& denominator) {
    return AbelianGroup::cokernel(numerator.coordinates(denominator.basis()));
}

} // namespace partot
