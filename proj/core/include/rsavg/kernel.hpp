#pragma once

#include <memory>
#include <vector>

#include "rsavg/exactmath.hpp"
#include "rsavg/quadfield.hpp"
#include "rsavg/repnum.hpp"

namespace rsavg {

/// Constant term b_{0,A} of the kernel. `brandt` uses h/u^2, which makes the
/// summed Eisenstein correction u^2 sum_A b_{0,A} a_m(E)/a_0(E) equal to
/// 12 h^2 sigma_N(m)/(N-1) and so agrees with the height-pairing side.
/// `literal` keeps h/(2u^2), which yields half of that.
enum class ConstantTerm { brandt, literal };

const char * to_string(ConstantTerm c);

/// A prime q = -N mod D, split in K, used to realize the class "-N A".
struct AuxiliaryPrime {
    i64 q = 0;
    int Q_class = 0;
    i64 D = 0;
    i64 N = 0;
    i64 m_max = 0;
};

/// Throws Error(invalid_parameters) unless N is prime, inert in K, N does not divide D.
void require_inert_level(ClassGroup const & G, i64 N);

/// The `skip`-th smallest admissible q (skip = 0 gives the smallest):
/// q prime, q = -N mod D, q > m_max, q coprime to 2ND.
AuxiliaryPrime auxiliary_prime(ClassGroup const & G, i64 N, i64 m_max, Orientation orientation = Orientation::direct,
                               int skip = 0, i64 search_bound = 10'000'000);

/// Number of ideals I of norm n with base_class * [I] in Pic^2.
i64 R_braced(ClassGroup const & G, int base_class, i64 n);

Rational eisenstein_coeff(i64 N, i64 m);

Rational b_zero(ClassGroup const & G, ConstantTerm convention = ConstantTerm::brandt);

/// b_{m,A}: m^{k-1} [ (h/u) r_A(Dm) + sum_{n <= mD/N} d((n,D)) r_A(mD - nN) R_{QA}(n) P_{k-1}(1 - 2nN/(mD)) ].
Rational b_coeff(ClassGroup const & G, i64 N, int k, int A, i64 m, AuxiliaryPrime const & aux,
                 ConstantTerm convention = ConstantTerm::brandt);

/// b_{m,A} - [k = 1] (b_{0,A}/a_0(E)) a_m(E).
Rational g_cusp_coeff(ClassGroup const & G, i64 N, int k, int A, i64 m, AuxiliaryPrime const & aux,
                      ConstantTerm convention = ConstantTerm::brandt);

/// b_{m,A} and the cuspidal coefficients for every class, 0 <= m <= M_max.
class KernelSeries
{
  public:
    KernelSeries(std::shared_ptr<ClassGroup const> group, i64 N, int k, i64 M_max,
                 Orientation orientation = Orientation::direct, ConstantTerm convention = ConstantTerm::brandt);
    KernelSeries(std::shared_ptr<ClassGroup const> group, i64 N, int k, i64 M_max, Orientation orientation,
                 ConstantTerm convention, AuxiliaryPrime aux, std::vector<std::vector<Rational>> b);

    ClassGroup const & group() const { return *group_; }
    i64 N() const { return N_; }
    int k() const { return k_; }
    i64 M_max() const { return M_max_; }
    Orientation orientation() const { return orientation_; }
    ConstantTerm convention() const { return convention_; }
    AuxiliaryPrime const & aux() const { return aux_; }

    Rational const & b(int A, i64 m) const;
    Rational cusp(int A, i64 m) const;
    std::vector<std::vector<Rational>> const & rows() const { return b_; }

  private:
    std::shared_ptr<ClassGroup const> group_;
    i64 N_;
    int k_;
    i64 M_max_;
    Orientation orientation_;
    ConstantTerm convention_;
    AuxiliaryPrime aux_;
    std::vector<std::vector<Rational>> b_;  // b_[A][m]
};

}  // namespace rsavg
