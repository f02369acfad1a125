#pragma once

#include <array>
#include <vector>

#include "rsavg/exactmath.hpp"
#include "rsavg/lattice.hpp"

namespace rsavg {

/// Coordinates in the basis 1, i, j, k.
using QElem = std::array<Rational, 4>;

/// Definite quaternion algebra (a, b): i^2 = a, j^2 = b, k = ij, a, b < 0.
struct QuaternionAlgebra {
    i64 a = -1;
    i64 b = -1;

    QElem mul(QElem const & x, QElem const & y) const;
    QElem conj(QElem const & x) const;
    Rational nrd(QElem const & x) const;
    Rational trd(QElem const & x) const { return 2 * x[0]; }
    /// trd(x conj(y)), the bilinear form with trd(x conj(x)) = 2 nrd(x).
    Rational pair(QElem const & x, QElem const & y) const;
};

QElem qelem(Rational x0, Rational x1 = 0, Rational x2 = 0, Rational x3 = 0);

/// Full-rank Z-lattice in the algebra, kept in Hermite normal form.
class QLattice
{
  public:
    QLattice() = default;
    static QLattice from_generators(std::vector<QElem> const & gens);

    std::array<QElem, 4> const & basis() const { return basis_; }
    QElem const & operator[](std::size_t i) const { return basis_[i]; }

    /// |det| of the basis in 1, i, j, k coordinates.
    Rational covolume() const;
    /// Coordinates of x in the lattice basis (rational in general).
    std::array<Rational, 4> coordinates(QElem const & x) const;
    bool contains(QElem const & x) const;
    QElem combine(std::vector<i64> const & coeffs) const;

    bool operator==(QLattice const & o) const { return basis_ == o.basis_; }

  private:
    std::array<QElem, 4> basis_{};
};

QLattice lattice_product(QuaternionAlgebra const & B, QLattice const & I, QLattice const & J);
QLattice lattice_conjugate(QuaternionAlgebra const & B, QLattice const & I);
QLattice lattice_scale(QLattice const & I, Rational const & s);

/// Integer matrix of trd(e_a conj(e_b)) / scale; throws if not integral.
IntMatrix pair_gram(QuaternionAlgebra const & B, QLattice const & L, Rational const & scale);

}  // namespace rsavg
