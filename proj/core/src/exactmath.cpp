#include "rsavg/exactmath.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rsavg/arith.hpp"
#include "rsavg/error.hpp"

namespace rsavg {

Rational make_rational(Integer const & num, Integer const & den)
{
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string const & text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (std::invalid_argument const &) {
        throw Error(ErrorCode::bad_input, "not a rational: '" + text + "'");
    } catch (std::domain_error const &) {
        throw Error(ErrorCode::bad_input, "zero denominator in '" + text + "'");
    }
}

std::string to_string(Integer const & x) { return x.get_str(); }

std::string to_string(Rational const & x) { return x.get_str(); }

long p_valuation(Integer const & x, long p)
{
    if (x == 0) throw std::domain_error("p_valuation of zero");
    Integer t = abs(x);
    long v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
        t /= p;
        ++v;
    }
    return v;
}

long p_valuation(Rational const & x, long p)
{
    return p_valuation(Integer(x.get_num()), p) - p_valuation(Integer(x.get_den()), p);
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t r = n;
    for (auto const & pe : factorize(n)) r = r / pe.p * (pe.p - 1);
    return r;
}

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> poly_divexact(std::vector<Integer> num, std::vector<Integer> const & den)
{
    std::size_t const dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(std::int64_t order)
{
    if (order < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    std::vector<Integer> p(static_cast<std::size_t>(order) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(order)] = 1;
    for (std::int64_t d : divisors(order))
        if (d < order) p = poly_divexact(p, cyclotomic_polynomial(d));
    return p;
}

CyclotomicField::CyclotomicField(std::int64_t order)
    : order_(order)
    , phi_(cyclotomic_polynomial(order))
{
    std::size_t const deg = degree();
    powers_.reserve(static_cast<std::size_t>(order));
    std::vector<Rational> cur(deg, 0);
    cur[0] = 1;
    for (std::int64_t t = 0; t < order; ++t) {
        powers_.push_back(cur);
        // multiply by zeta: shift, then fold the top coefficient through Phi_e
        Rational top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * Rational(phi_[i]);
    }
}

std::shared_ptr<CyclotomicField const> CyclotomicField::get(std::int64_t order)
{
    static std::mutex mu;
    static std::map<std::int64_t, std::shared_ptr<CyclotomicField const>> cache;
    if (order < 1) throw std::invalid_argument("cyclotomic field order must be >= 1");
    std::lock_guard lock(mu);
    auto & slot = cache[order];
    if (!slot) slot = std::make_shared<CyclotomicField const>(order);
    return slot;
}

std::vector<Rational> const & CyclotomicField::power(std::int64_t t) const
{
    return powers_[static_cast<std::size_t>(mod_floor(t, order_))];
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const
{
    std::size_t const deg = degree();
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * Rational(phi_[j]);
    }
    poly.resize(deg, 0);
    return poly;
}

CyclotomicValue::CyclotomicValue()
    : CyclotomicValue(1)
{
}

CyclotomicValue::CyclotomicValue(std::int64_t order)
    : field_(CyclotomicField::get(order))
    , coeffs_(field_->degree(), 0)
{
}

CyclotomicValue CyclotomicValue::embed(Rational const & r, std::int64_t order)
{
    CyclotomicValue v(order);
    v.coeffs_[0] = r;
    return v;
}

CyclotomicValue CyclotomicValue::root_of_unity(std::int64_t order, std::int64_t power)
{
    CyclotomicValue v(order);
    v.coeffs_ = v.field_->power(power);
    return v;
}

CyclotomicValue CyclotomicValue::from_coefficients(std::int64_t order, std::vector<Rational> coefficients)
{
    CyclotomicValue v(order);
    v.coeffs_ = v.field_->reduce(std::move(coefficients));
    return v;
}

bool CyclotomicValue::is_zero() const
{
    for (auto const & c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicValue::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Rational> CyclotomicValue::to_rational() const
{
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

CyclotomicValue CyclotomicValue::conj() const
{
    CyclotomicValue out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        auto const & p = field_->power(-static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j < p.size(); ++j) out.coeffs_[j] += coeffs_[i] * p[j];
    }
    return out;
}

std::complex<double> CyclotomicValue::to_complex() const
{
    double const theta = 2.0 * std::numbers::pi / static_cast<double>(order());
    std::complex<double> z(0.0, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        z += coeffs_[i].get_d() * std::polar(1.0, theta * static_cast<double>(i));
    return z;
}

void CyclotomicValue::require_same_field(CyclotomicValue const & o) const
{
    if (order() != o.order())
        throw std::invalid_argument("cyclotomic values of different orders " +
                                    std::to_string(order()) + " and " + std::to_string(o.order()));
}

CyclotomicValue & CyclotomicValue::operator+=(CyclotomicValue const & o)
{
    require_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicValue & CyclotomicValue::operator-=(CyclotomicValue const & o)
{
    require_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicValue & CyclotomicValue::operator*=(CyclotomicValue const & o)
{
    require_same_field(o);
    std::size_t const n = coeffs_.size();
    std::vector<Rational> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = field_->reduce(std::move(prod));
    return *this;
}

CyclotomicValue & CyclotomicValue::operator*=(Rational const & r)
{
    for (auto & c : coeffs_) c *= r;
    return *this;
}

CyclotomicValue CyclotomicValue::operator-() const
{
    CyclotomicValue v = *this;
    for (auto & c : v.coeffs_) c = -c;
    return v;
}

bool operator==(CyclotomicValue const & a, CyclotomicValue const & b)
{
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

std::string CyclotomicValue::to_string() const
{
    if (is_rational()) return rsavg::to_string(coeffs_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].get_str() << ")";
        if (i > 0) os << "*z" << order() << "^" << i;
    }
    return os.str();
}

LegendrePoly LegendrePoly::of_degree(int r)
{
    if (r < 0) throw std::invalid_argument("Legendre degree must be >= 0");
    std::vector<Rational> prev{1};
    if (r == 0) return {0, prev};
    std::vector<Rational> cur{0, 1};
    for (int n = 1; n < r; ++n) {
        // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
        std::vector<Rational> next(static_cast<std::size_t>(n) + 2, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += Rational(2 * n + 1) * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= Rational(n) * prev[i];
        for (auto & c : next) c /= n + 1;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {r, cur};
}

Rational LegendrePoly::operator()(Rational const & x) const
{
    Rational acc = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
    return acc;
}

Rational legendre_eval(int r, Rational const & x)
{
    if (r < 0) throw std::invalid_argument("Legendre degree must be >= 0");
    Rational prev = 1;
    if (r == 0) return prev;
    Rational cur = x;
    for (int n = 1; n < r; ++n) {
        Rational next = (Rational(2 * n + 1) * x * cur - Rational(n) * prev) / (n + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace rsavg
