#include "rsavg/quaternion.hpp"

#include <stdexcept>

#include "rsavg/linalg.hpp"

namespace rsavg {

QElem QuaternionAlgebra::mul(QElem const & x, QElem const & y) const
{
    Rational const A(static_cast<long>(a)), Bq(static_cast<long>(b));
    return {x[0] * y[0] + A * x[1] * y[1] + Bq * x[2] * y[2] - A * Bq * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] - Bq * x[2] * y[3] + Bq * x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] + A * x[1] * y[3] - A * x[3] * y[1],
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

QElem QuaternionAlgebra::conj(QElem const & x) const { return {x[0], -x[1], -x[2], -x[3]}; }

Rational QuaternionAlgebra::nrd(QElem const & x) const
{
    Rational const A(static_cast<long>(a)), Bq(static_cast<long>(b));
    return x[0] * x[0] - A * x[1] * x[1] - Bq * x[2] * x[2] + A * Bq * x[3] * x[3];
}

Rational QuaternionAlgebra::pair(QElem const & x, QElem const & y) const
{
    Rational const A(static_cast<long>(a)), Bq(static_cast<long>(b));
    return 2 * (x[0] * y[0] - A * x[1] * y[1] - Bq * x[2] * y[2] + A * Bq * x[3] * y[3]);
}

QElem qelem(Rational x0, Rational x1, Rational x2, Rational x3) { return {x0, x1, x2, x3}; }

QLattice QLattice::from_generators(std::vector<QElem> const & gens)
{
    Integer L = 1;
    for (auto const & g : gens)
        for (auto const & c : g) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
    IntMatrix rows;
    rows.reserve(gens.size());
    for (auto const & g : gens) {
        std::vector<Integer> row(4);
        for (std::size_t t = 0; t < 4; ++t) {
            Rational const s = g[t] * Rational(L);
            row[t] = s.get_num();
        }
        rows.push_back(std::move(row));
    }
    auto const h = hnf_basis(std::move(rows));
    if (h.size() != 4) throw std::invalid_argument("QLattice: generators do not span a full-rank lattice");
    QLattice out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t t = 0; t < 4; ++t) out.basis_[r][t] = make_rational(h[r][t], L);
    return out;
}

Rational QLattice::covolume() const
{
    RationalMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t t = 0; t < 4; ++t) m(r, t) = basis_[r][t];
    return abs(determinant(m));
}

std::array<Rational, 4> QLattice::coordinates(QElem const & x) const
{
    std::vector<RationalVector> cols;
    for (auto const & e : basis_) cols.emplace_back(e.begin(), e.end());
    auto const c = coordinates_in_span(cols, RationalVector(x.begin(), x.end()));
    return {c[0], c[1], c[2], c[3]};
}

bool QLattice::contains(QElem const & x) const
{
    for (auto const & c : coordinates(x))
        if (c.get_den() != 1) return false;
    return true;
}

QElem QLattice::combine(std::vector<i64> const & coeffs) const
{
    QElem out{0, 0, 0, 0};
    for (std::size_t r = 0; r < 4; ++r) {
        if (coeffs[r] == 0) continue;
        Rational const c(static_cast<long>(coeffs[r]));
        for (std::size_t t = 0; t < 4; ++t) out[t] += c * basis_[r][t];
    }
    return out;
}

QLattice lattice_product(QuaternionAlgebra const & B, QLattice const & I, QLattice const & J)
{
    std::vector<QElem> gens;
    gens.reserve(16);
    for (auto const & x : I.basis())
        for (auto const & y : J.basis()) gens.push_back(B.mul(x, y));
    return QLattice::from_generators(gens);
}

QLattice lattice_conjugate(QuaternionAlgebra const & B, QLattice const & I)
{
    std::vector<QElem> gens;
    for (auto const & x : I.basis()) gens.push_back(B.conj(x));
    return QLattice::from_generators(gens);
}

QLattice lattice_scale(QLattice const & I, Rational const & s)
{
    std::vector<QElem> gens;
    for (auto x : I.basis()) {
        for (auto & c : x) c *= s;
        gens.push_back(x);
    }
    return QLattice::from_generators(gens);
}

IntMatrix pair_gram(QuaternionAlgebra const & B, QLattice const & L, Rational const & scale)
{
    IntMatrix g(4, std::vector<Integer>(4));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) {
            Rational const v = B.pair(L[r], L[s]) / scale;
            if (v.get_den() != 1) throw std::domain_error("pair_gram: form is not integral on the lattice");
            g[r][s] = v.get_num();
        }
    return g;
}

}  // namespace rsavg
