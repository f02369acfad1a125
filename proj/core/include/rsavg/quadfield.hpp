#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rsavg/arith.hpp"
#include "rsavg/exactmath.hpp"

namespace rsavg {

/// -D for an odd fundamental discriminant: D odd, squarefree, D = 3 mod 4.
class FundamentalDiscriminant
{
  public:
    /// Throws Error(not_fundamental) unless D is odd, squarefree and 3 mod 4.
    static FundamentalDiscriminant validate(i64 D);
    static bool is_valid(i64 D);

    i64 value() const { return D_; }
    auto operator<=>(FundamentalDiscriminant const &) const = default;

  private:
    explicit FundamentalDiscriminant(i64 D) : D_(D) {}
    i64 D_;
};

inline FundamentalDiscriminant validate_discriminant(i64 D)
{
    return FundamentalDiscriminant::validate(D);
}

/// Positive definite form a x^2 + b x y + c y^2. Reduced means
/// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
struct ReducedForm {
    i64 a = 0, b = 0, c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    i64 evaluate(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
    std::string to_string() const;

    auto operator<=>(ReducedForm const &) const = default;
};

/// Reduction of any positive definite form to the reduced representative
/// of its SL2(Z) class.
ReducedForm reduce_form(i64 a, i64 b, i64 c);

/// Dirichlet composition followed by reduction. Throws
/// Error(discriminant_mismatch) when the discriminants differ.
ReducedForm compose(ReducedForm const & f, ReducedForm const & g);

enum class Splitting { split, inert, ramified };
const char * to_string(Splitting s);
Splitting splitting_type(FundamentalDiscriminant D, i64 p);

/// Pic(O_K) for K = Q(sqrt(-D)), realized on reduced forms. Element 0 is the
/// principal form. Immutable after construction.
class ClassGroup
{
  public:
    explicit ClassGroup(FundamentalDiscriminant D);

    /// Reassemble from serialized data; validates the group law.
    ClassGroup(FundamentalDiscriminant D, std::vector<ReducedForm> forms);

    FundamentalDiscriminant discriminant() const { return D_; }
    i64 D() const { return D_.value(); }
    int h() const { return static_cast<int>(forms_.size()); }
    int u() const { return D_.value() == 3 ? 3 : 1; }
    /// Number of roots of unity in O_K (= 2u).
    int w() const { return 2 * u(); }
    int exponent() const { return exponent_; }

    std::vector<ReducedForm> const & elements() const { return forms_; }
    ReducedForm const & form(int i) const { return forms_[static_cast<std::size_t>(i)]; }

    int identity() const { return 0; }
    int op(int i, int j) const { return table_[static_cast<std::size_t>(i * h() + j)]; }
    int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
    int power(int i, i64 n) const;
    int order_of(int i) const { return order_[static_cast<std::size_t>(i)]; }

    /// Index of the class of a (not necessarily reduced) form of discriminant -D.
    int index_of(i64 a, i64 b, i64 c) const;
    int index_of(ReducedForm const & f) const { return index_of(f.a, f.b, f.c); }

    /// Class of a prime ideal above p (p split or ramified), via the
    /// dictionary (a, b, c) <-> [a, (-b + sqrt(-D))/2]. Which of the two
    /// primes above a split p is returned is fixed but arbitrary; its
    /// conjugate is inverse().
    int prime_ideal_class(i64 p) const;

  private:
    void build_table();

    FundamentalDiscriminant D_;
    std::vector<ReducedForm> forms_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> order_;
    int exponent_ = 1;
};

ClassGroup class_group(FundamentalDiscriminant D);

/// Enumerates reduced forms of discriminant -D in the canonical order used by
/// ClassGroup: principal form first, then by (a, |b|, -b).
std::vector<ReducedForm> reduced_forms(i64 D);

/// Character of Pic(O_K) with values zeta_e^{k_A}, e = group exponent.
class ClassCharacter
{
  public:
    ClassCharacter(std::shared_ptr<ClassGroup const> group, std::vector<i64> exponents);

    ClassGroup const & group() const { return *group_; }
    std::int64_t order() const { return group_->exponent(); }
    /// k_A with value(A) = zeta_e^{k_A}.
    std::vector<i64> const & exponents() const { return exponents_; }
    CyclotomicValue value(int A) const;
    bool is_trivial() const;
    bool is_real() const;  // values in {+1, -1}
    ClassCharacter conj() const;
    bool operator==(ClassCharacter const & o) const { return exponents_ == o.exponents_; }

  private:
    std::shared_ptr<ClassGroup const> group_;
    std::vector<i64> exponents_;
};

/// All h characters; the first is trivial, and the list is closed under
/// conjugation. Sorted by exponent vector.
std::vector<ClassCharacter> characters(std::shared_ptr<ClassGroup const> const & G);

/// Index set of Pic^2, sorted.
std::vector<int> square_classes(ClassGroup const & G);

}  // namespace rsavg
