#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rsavg {

/// Arbitrary-precision integer and rational. GMP keeps every mpq_class
/// produced by arithmetic canonical (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(Integer const & num, Integer const & den);
Rational parse_rational(std::string const & text);  // "n" or "n/d"
std::string to_string(Integer const & x);
std::string to_string(Rational const & x);

/// v_p(x); x must be nonzero.
long p_valuation(Integer const & x, long p);
long p_valuation(Rational const & x, long p);

std::int64_t euler_phi(std::int64_t n);

/// Q(zeta_e): reduced power basis modulo the e-th cyclotomic polynomial.
/// Instances are interned per order and immutable.
class CyclotomicField
{
  public:
    static std::shared_ptr<CyclotomicField const> get(std::int64_t order);

    std::int64_t order() const { return order_; }
    std::size_t degree() const { return phi_.size() - 1; }
    /// Monic integer coefficients of Phi_e, constant term first.
    std::vector<Integer> const & polynomial() const { return phi_; }
    /// zeta^t in the power basis, for 0 <= t < order.
    std::vector<Rational> const & power(std::int64_t t) const;

    /// Reduce a polynomial in zeta (constant term first) to the power basis.
    std::vector<Rational> reduce(std::vector<Rational> poly) const;

    explicit CyclotomicField(std::int64_t order);

  private:
    std::int64_t order_;
    std::vector<Integer> phi_;
    std::vector<std::vector<Rational>> powers_;
};

std::vector<Integer> cyclotomic_polynomial(std::int64_t order);

class CyclotomicValue
{
  public:
    CyclotomicValue();  // zero in Q(zeta_1) = Q
    explicit CyclotomicValue(std::int64_t order);  // zero

    static CyclotomicValue embed(Rational const & r, std::int64_t order);
    static CyclotomicValue root_of_unity(std::int64_t order, std::int64_t power);
    static CyclotomicValue from_coefficients(std::int64_t order,
                                             std::vector<Rational> coefficients);

    std::int64_t order() const { return field_->order(); }
    std::vector<Rational> const & coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> to_rational() const;
    CyclotomicValue conj() const;
    std::complex<double> to_complex() const;

    CyclotomicValue & operator+=(CyclotomicValue const & o);
    CyclotomicValue & operator-=(CyclotomicValue const & o);
    CyclotomicValue & operator*=(CyclotomicValue const & o);
    CyclotomicValue & operator*=(Rational const & r);

    friend CyclotomicValue operator+(CyclotomicValue a, CyclotomicValue const & b) { return a += b; }
    friend CyclotomicValue operator-(CyclotomicValue a, CyclotomicValue const & b) { return a -= b; }
    friend CyclotomicValue operator*(CyclotomicValue a, CyclotomicValue const & b) { return a *= b; }
    friend CyclotomicValue operator*(CyclotomicValue a, Rational const & r) { return a *= r; }
    friend CyclotomicValue operator*(Rational const & r, CyclotomicValue a) { return a *= r; }
    CyclotomicValue operator-() const;

    friend bool operator==(CyclotomicValue const & a, CyclotomicValue const & b);

    std::string to_string() const;

  private:
    void require_same_field(CyclotomicValue const & o) const;

    std::shared_ptr<CyclotomicField const> field_;
    std::vector<Rational> coeffs_;
};

inline CyclotomicValue cyclotomic_embed(Rational const & r, std::int64_t order)
{
    return CyclotomicValue::embed(r, order);
}

inline CyclotomicValue root_of_unity(std::int64_t order, std::int64_t power)
{
    return CyclotomicValue::root_of_unity(order, power);
}

/// Standard Legendre polynomial P_r with exact coefficients.
struct LegendrePoly {
    int degree;
    std::vector<Rational> coefficients;  // constant term first

    static LegendrePoly of_degree(int r);
    Rational operator()(Rational const & x) const;
};

/// P_r(x) by the three-term recurrence.
Rational legendre_eval(int r, Rational const & x);

}  // namespace rsavg
