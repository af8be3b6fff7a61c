#pragma once

#include "partot/integer_matrix.hpp"

#include <string>
#include <vector>

namespace partot {

/// Finitely generated abelian group Z^rank + Z/t1 + ... + Z/tk with
/// t1 | t2 | ... | tk and every ti > 1.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }
    /// "0", "Z", "Z^2 + Z/2 + Z/4", ...
    std::string to_string() const;

    /// Cokernel of an integer matrix: Z^rows / (column span).
    static AbelianGroup cokernel(const Matrix& relations);

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// A sublattice of Z^n, stored through its column Hermite basis so that equal
/// lattices have identical bases.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

    static Lattice span(const Matrix& generators);
    static Lattice full(std::size_t n) { return span(Matrix::identity(n)); }
    static Lattice zero(std::size_t n) { return Lattice(n); }
    /// Sublattice spanned by the coordinate vectors with index in [first, first+count).
    static Lattice coordinate(std::size_t n, std::size_t first, std::size_t count);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& vectors) const;
    bool contains(const Lattice& other) const { return contains(other.basis_); }
    /// True when Z^n / L is torsion free.
    bool is_saturated() const;

    /// Coordinates c with basis() * c == vectors; throws InvariantError if some
    /// column is not in the lattice.
    Matrix coordinates(const Matrix& vectors) const;

    Lattice operator+(const Lattice& other) const;
    Lattice intersect(const Lattice& other) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
};

/// {x : a x = 0}
Lattice kernel(const Matrix& a);
/// Span of the columns of a.
Lattice image(const Matrix& a);
/// a(L) for a lattice L in the source of a.
Lattice image(const Matrix& a, const Lattice& source);
/// {x : a x in target}
Lattice preimage(const Matrix& a, const Lattice& target);
/// numerator / denominator; requires denominator inside numerator.
AbelianGroup quotient(const Lattice& numerator, const Lattice& denominator);

} // namespace partot
