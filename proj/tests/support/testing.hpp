#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "rsavg/arith.hpp"
#include "rsavg/error.hpp"
#include "rsavg/quadfield.hpp"

namespace rsavg {

inline void PrintTo(CyclotomicValue const & v, std::ostream * os) { *os << v.to_string(); }

}  // namespace rsavg

namespace rsavg::support {

inline std::shared_ptr<ClassGroup const> group(i64 D)
{
    return std::make_shared<ClassGroup const>(FundamentalDiscriminant::validate(D));
}

inline std::vector<i64> fundamental_below(i64 bound)
{
    std::vector<i64> out;
    for (i64 D = 3; D < bound; D += 4)
        if (FundamentalDiscriminant::is_valid(D)) out.push_back(D);
    return out;
}

inline bool inert(i64 D, i64 N) { return is_prime(N) && D % N != 0 && kronecker(-D, N) == -1; }

inline std::vector<i64> inert_primes(i64 D, i64 lo, i64 hi)
{
    std::vector<i64> out;
    for (i64 N : primes_in(lo, hi))
        if (inert(D, N)) out.push_back(N);
    return out;
}

/// Deterministic source of random test cases.
class Gen
{
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    i64 between(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng_); }

    template <class T>
    T const & pick(std::vector<T> const & v)
    {
        return v[static_cast<std::size_t>(between(0, static_cast<i64>(v.size()) - 1))];
    }

  private:
    std::mt19937_64 rng_;
};

/// #{(x, y) : a x^2 + b x y + c y^2 = m} by scanning a box.
inline i64 brute_representations(i64 a, i64 b, i64 c, i64 m)
{
    i64 const D = 4 * a * c - b * b;
    i64 const ybound = static_cast<i64>(2 * std::sqrt(static_cast<double>(a * m) / D)) + 2;
    i64 const xbound = static_cast<i64>(2 * std::sqrt(static_cast<double>(c * m) / D)) + 2;
    i64 n = 0;
    for (i64 x = -xbound; x <= xbound; ++x)
        for (i64 y = -ybound; y <= ybound; ++y)
            if (a * x * x + b * x * y + c * y * y == m) ++n;
    return n;
}

/// Total number of ideals of norm n in the maximal order: sum_{d | n} chi_{-D}(d).
inline i64 ideal_count(i64 D, i64 n)
{
    i64 s = 0;
    for (i64 d = 1; d <= n; ++d)
        if (n % d == 0) s += kronecker(-D, d);
    return s;
}

/// Error code thrown by f, or nullopt if f returns normally or throws something else.
template <class F>
std::optional<ErrorCode> error_code(F && f)
{
    try {
        f();
    } catch (Error const & e) {
        return e.code();
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace rsavg::support
