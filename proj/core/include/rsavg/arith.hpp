#pragma once

// Elementary integer number theory on machine integers. Everything here is
// small-argument (trial division) by intent: parameters in this library are
// discriminants and levels well below 2^31.

#include <cstdint>
#include <utility>
#include <vector>

namespace rsavg {

using i64 = std::int64_t;

struct PrimePower {
    i64 p;
    int e;
    bool operator==(PrimePower const &) const = default;
};

bool is_prime(i64 n);
i64 next_prime(i64 n);  // smallest prime > n
std::vector<i64> primes_in(i64 lo, i64 hi);  // inclusive

std::vector<PrimePower> factorize(i64 n);
bool is_squarefree(i64 n);
std::vector<i64> divisors(i64 n);  // sorted
i64 num_divisors(i64 n);

/// Sum of the divisors of m that are coprime to N.
i64 sigma_coprime(i64 N, i64 m);

/// Kronecker symbol (a | n) for n > 0.
int kronecker(i64 a, i64 n);

i64 mod_floor(i64 a, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 mod);

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtGcd {
    i64 g, x, y;
};
ExtGcd ext_gcd(i64 a, i64 b);

bool is_perfect_square(i64 n, i64 & root);

}  // namespace rsavg
