#pragma once

#include <vector>

#include "rsavg/kernel.hpp"
#include "rsavg/lattice.hpp"
#include "rsavg/linalg.hpp"
#include "rsavg/quadfield.hpp"
#include "rsavg/quaternion.hpp"

namespace rsavg {

/// Maximal order in the quaternion algebra ramified at {N, infinity}.
struct MaximalOrder {
    i64 N = 0;
    QuaternionAlgebra algebra;
    QLattice lattice;
};

/// Explicit maximal order (Hurwitz for N = 2, otherwise by N mod 8);
/// verified to be a ring with reduced discriminant N. Throws
/// Error(invalid_parameters) unless N is prime.
MaximalOrder maximal_order(i64 N);

/// Integer matrix of 2 nrd on the order basis.
IntMatrix norm_gram(MaximalOrder const & O);

struct BrandtOptions {
    /// Largest number of candidate ideals examined by the class search.
    i64 max_ideals = 100000;
};

class BrandtModule
{
  public:
    /// Reassemble from stored data; norms and the order are recomputed.
    BrandtModule(i64 N, i64 M_max, std::vector<QLattice> ideals, std::vector<i64> weights,
                 std::vector<SmallMatrix> matrices);

    i64 N() const { return order_.N; }
    i64 M_max() const { return M_max_; }
    std::size_t size() const { return ideals_.size(); }
    MaximalOrder const & order() const { return order_; }
    std::vector<QLattice> const & ideals() const { return ideals_; }
    std::vector<Rational> const & norms() const { return norms_; }
    /// w_j = |R_j^x| / 2.
    std::vector<i64> const & weights() const { return weights_; }
    /// B(m) for 1 <= m <= M_max; B(m)_{ij} = #{b in conj(I_j) I_i : nrd b = m nrd(I_i) nrd(I_j)} / (2 w_j).
    SmallMatrix const & B(i64 m) const;
    std::vector<SmallMatrix> const & matrices() const { return B_; }

    /// T_m x = B(m)^t x.
    RationalVector hecke(i64 m, RationalVector const & x) const;
    RationalMatrix hecke_matrix(i64 m) const;
    Rational mass() const;
    /// (1/w_j)_j.
    RationalVector eisenstein() const;
    /// Right order of I_j.
    QLattice right_order(std::size_t j) const;

  private:
    MaximalOrder order_;
    i64 M_max_;
    std::vector<QLattice> ideals_;
    std::vector<Rational> norms_;
    std::vector<i64> weights_;
    std::vector<SmallMatrix> B_;  // B_[m - 1]
};

BrandtModule build_module(i64 N, i64 M_max, BrandtOptions const & options = {});

/// Reduced norm of a left ideal of the maximal order.
Rational ideal_norm(MaximalOrder const & O, QLattice const & I);

/// I ~ J as left ideals (J = I b for some b in B^x).
bool ideals_equivalent(MaximalOrder const & O, QLattice const & I, QLattice const & J);

struct GrossPointVector {
    i64 D = 0;
    std::vector<i64> c;  // one orientation: sum_j c_j = h
    std::vector<i64> roots;  // #{alpha in R_j : trd 1, nrd (1+D)/4}
};

GrossPointVector gross_points(BrandtModule const & M, ClassGroup const & G);

/// sum_j w_j x_j y_j.
Rational height_pairing(BrandtModule const & M, RationalVector const & x, RationalVector const & y);

struct AverageComparison {
    i64 m = 0;
    Rational left;  // <c, T_m c>
    Rational right;  // u h R(m) + u^2 sum_n d((n,D)) sum_A r_A(mD - nN) R_{QA}(n)
    Rational eisenstein;  // 12 h^2 sigma_N(m) / (N - 1)
    Rational cusp;  // left - eisenstein
    bool equal = false;
};

AverageComparison verify_average(BrandtModule const & M, ClassGroup const & G, GrossPointVector const & c, i64 m);
AverageComparison verify_average(BrandtModule const & M, ClassGroup const & G, i64 m);

struct HeckeEigenvector {
    RationalVector vector;  // primitive integral, first nonzero entry positive
    std::vector<std::pair<i64, Rational>> eigenvalues;  // (p, a_p)
};

struct ResidualBlock {
    std::vector<RationalVector> basis;
    i64 p = 0;
    RationalPoly charpoly;  // of T_p on the block, constant term first
};

struct EigenSplit {
    RationalVector eisenstein;
    std::vector<HeckeEigenvector> cuspidal;
    std::vector<ResidualBlock> residual;
};

EigenSplit eigen_split(BrandtModule const & M);

/// <c_f, c_f> / u^2 with c_f the f-component of the Gross point vector.
Rational central_value_ratio(BrandtModule const & M, ClassGroup const & G, RationalVector const & f);
Rational central_value_ratio(BrandtModule const & M, ClassGroup const & G, GrossPointVector const & c,
                             RationalVector const & f);

}  // namespace rsavg
