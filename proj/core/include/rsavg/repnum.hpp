#pragma once

#include <memory>
#include <vector>

#include "rsavg/exactmath.hpp"
#include "rsavg/quadfield.hpp"

namespace rsavg {

/// Which ideal class a reduced form stands for: the class of
/// [a, (-b + sqrt(-D))/2] (direct) or its inverse. Representation counts
/// are invariant under the swap, since conjugation maps ideals of class A
/// and norm m bijectively onto ideals of class A^{-1} and norm m.
enum class Orientation { direct, inverse };

/// #{(x, y) in Z^2 : f(x, y) = m}, by walking y across the ellipse
/// 4 a m >= D y^2 and solving the quadratic in x.
i64 form_representations(ReducedForm const & f, i64 D, i64 m);

/// Number of integral ideals of norm m in class A; 1/(2u) for m = 0.
Rational r_class(ClassGroup const & G, int A, i64 m);

/// sum_A Psi(A) r_A(m) for m >= 1; h/(2u) or 0 at m = 0.
CyclotomicValue r_psi(ClassGroup const & G, ClassCharacter const & psi, i64 m);

/// sum_A r_A(m); h/(2u) at m = 0.
Rational R_total(ClassGroup const & G, i64 m);

/// sum over d | m with gcd(d, N) = 1 of d.
i64 sigma_N(i64 N, i64 m);

/// m-th coefficient of theta_Psi = sum_A conj(Psi(A)) theta_A.
CyclotomicValue theta_coefficient(ClassGroup const & G, ClassCharacter const & psi, i64 m);

/// Independent route to r_class: enumerate the integral ideals of norm m by
/// combining prime-ideal factorizations, locating each in the class group.
Rational r_class_oracle(ClassGroup const & G, int A, i64 m, Orientation orientation = Orientation::direct);

/// Per-class ideal counts for norm m (m >= 1) by the ideal-enumeration route.
std::vector<Integer> ideal_counts_by_class(ClassGroup const & G, i64 m, Orientation orientation = Orientation::direct);

/// r_A(m) for every class and 0 <= m <= M_max.
class RepTable
{
  public:
    RepTable(std::shared_ptr<ClassGroup const> group, i64 M_max);
    RepTable(std::shared_ptr<ClassGroup const> group, i64 M_max, std::vector<std::vector<Rational>> rows);

    ClassGroup const & group() const { return *group_; }
    std::shared_ptr<ClassGroup const> const & group_ptr() const { return group_; }
    i64 M_max() const { return M_max_; }

    Rational const & r(int A, i64 m) const;
    Rational R(i64 m) const;
    CyclotomicValue r_psi(ClassCharacter const & psi, i64 m) const;
    std::vector<std::vector<Rational>> const & rows() const { return rows_; }

  private:
    std::shared_ptr<ClassGroup const> group_;
    i64 M_max_;
    std::vector<std::vector<Rational>> rows_;  // rows_[A][m]
};

}  // namespace rsavg
