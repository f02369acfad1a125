#include "rsavg/arith.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <numeric>
#include <stdexcept>

#include "rsavg/error.hpp"

namespace rsavg {

const char * to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::not_fundamental: return "NotFundamental";
    case ErrorCode::discriminant_mismatch: return "DiscriminantMismatch";
    case ErrorCode::invalid_parameters: return "InvalidParameters";
    case ErrorCode::inconsistent_auxiliary: return "InconsistentAuxiliary";
    case ErrorCode::search_exhausted: return "SearchExhausted";
    case ErrorCode::enumeration_bound: return "EnumerationBound";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_cuspidal: return "NotCuspidal";
    case ErrorCode::cache_corrupt: return "CacheCorrupt";
    case ErrorCode::bad_input: return "BadInput";
    }
    return "Unknown";
}

bool is_prime(i64 n)
{
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (i64 d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

i64 next_prime(i64 n)
{
    i64 c = n < 2 ? 2 : n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

std::vector<i64> primes_in(i64 lo, i64 hi)
{
    std::vector<i64> out;
    for (i64 n = std::max<i64>(lo, 2); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::vector<PrimePower> factorize(i64 n)
{
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_squarefree(i64 n)
{
    for (auto const & [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::vector<i64> divisors(i64 n)
{
    std::vector<i64> out{1};
    for (auto const & [p, e] : factorize(n)) {
        std::size_t const base = out.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 num_divisors(i64 n)
{
    i64 d = 1;
    for (auto const & pe : factorize(n)) d *= pe.e + 1;
    return d;
}

i64 sigma_coprime(i64 N, i64 m)
{
    if (m < 1) throw std::invalid_argument("sigma_coprime: m must be positive");
    i64 s = 0;
    for (i64 d : divisors(m))
        if (std::gcd(d, N) == 1) s += d;
    return s;
}

i64 mod_floor(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 pow_mod(i64 base, i64 exp, i64 mod)
{
    __int128 r = 1 % mod;
    __int128 b = mod_floor(base, mod);
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<i64>(r);
}

namespace {

// Jacobi symbol (a | n), n odd positive.
int jacobi(i64 a, i64 n)
{
    a = mod_floor(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

}  // namespace

int kronecker(i64 a, i64 n)
{
    if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
    int t = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 r = mod_floor(a, 8);
        if (r == 3 || r == 5) t = -t;
    }
    if (n == 1) return t;
    return t * jacobi(a, n);
}

ExtGcd ext_gcd(i64 a, i64 b)
{
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

bool is_perfect_square(i64 n, i64 & root)
{
    if (n < 0) return false;
    i64 s = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    root = s;
    return s * s == n;
}

}  // namespace rsavg
