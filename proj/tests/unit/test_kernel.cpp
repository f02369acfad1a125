#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rsavg/kernel.hpp"
#include "testing.hpp"

using namespace rsavg;
using support::error_code;

TEST(AuxiliaryPrime, FrozenChoices)
{
    EXPECT_EQ(auxiliary_prime(*support::group(3), 5, 1).q, 7);
    EXPECT_EQ(auxiliary_prime(*support::group(23), 5, 1).q, 41);
    EXPECT_EQ(auxiliary_prime(*support::group(15), 7, 1).q, 23);
}

TEST(AuxiliaryPrime, Admissibility)
{
    support::Gen gen(9);
    auto const Ds = support::fundamental_below(200);
    for (int t = 0; t < 200; ++t) {
        i64 const D = gen.pick(Ds);
        auto const G = support::group(D);
        auto const Ns = support::inert_primes(D, 2, 150);
        i64 const N = gen.pick(Ns);
        i64 const m_max = gen.between(1, 40);
        int const skip = static_cast<int>(gen.between(0, 3));
        auto const aux = auxiliary_prime(*G, N, m_max, Orientation::direct, skip);
        EXPECT_TRUE(is_prime(aux.q));
        EXPECT_EQ(mod_floor(aux.q + N, D), 0);
        EXPECT_GT(aux.q, m_max);
        EXPECT_NE(aux.q, N);
        EXPECT_NE(D % aux.q, 0);
        EXPECT_NE(kronecker(-D, aux.q), -1);
        EXPECT_EQ(aux.Q_class, G->prime_ideal_class(aux.q));
        EXPECT_EQ(auxiliary_prime(*G, N, m_max, Orientation::inverse, skip).Q_class, G->inverse(aux.Q_class));
    }
}

TEST(AuxiliaryPrime, RejectsBadLevels)
{
    auto const G = support::group(23);
    EXPECT_EQ(error_code([&] { auxiliary_prime(*G, 2, 1); }), ErrorCode::invalid_parameters);   // split
    EXPECT_EQ(error_code([&] { auxiliary_prime(*G, 23, 1); }), ErrorCode::invalid_parameters);  // ramified
    EXPECT_EQ(error_code([&] { auxiliary_prime(*G, 15, 1); }), ErrorCode::invalid_parameters);  // composite
    EXPECT_EQ(error_code([&] { auxiliary_prime(*G, 5, 1, Orientation::direct, 0, 20); }), ErrorCode::search_exhausted);
}

TEST(Kernel, FrozenCoefficients)
{
    auto const G = support::group(3);
    auto const aux = auxiliary_prime(*G, 5, 1);
    EXPECT_EQ(b_zero(*G), make_rational(1, 9));
    EXPECT_EQ(b_zero(*G, ConstantTerm::literal), make_rational(1, 18));
    EXPECT_EQ(b_coeff(*G, 5, 1, 0, 1, aux), make_rational(1, 3));
    EXPECT_EQ(g_cusp_coeff(*G, 5, 1, 0, 1, aux), 0);
    EXPECT_EQ(g_cusp_coeff(*G, 5, 1, 0, 1, aux, ConstantTerm::literal), make_rational(1, 6));
    EXPECT_EQ(eisenstein_coeff(5, 0), make_rational(1, 3));
    EXPECT_EQ(eisenstein_coeff(5, 10), 3);
}

TEST(Kernel, BracedCountsMatchOracle)
{
    for (i64 D : {15, 23, 39, 47, 55, 87}) {
        auto const G = support::group(D);
        for (int base = 0; base < G->h(); ++base)
            for (i64 n = 1; n <= 60; ++n) EXPECT_EQ(Rational(R_braced(*G, base, n)), oracle::braced(*G, base, n));
    }
}

TEST(Kernel, CoefficientsMatchOracle)
{
    support::Gen gen(13);
    auto const Ds = support::fundamental_below(120);
    for (int t = 0; t < 120; ++t) {
        i64 const D = gen.pick(Ds);
        auto const G = support::group(D);
        i64 const N = gen.pick(support::inert_primes(D, 2, 80));
        int const k = static_cast<int>(gen.between(1, 4));
        i64 const m = gen.between(1, 12);
        auto const aux = auxiliary_prime(*G, N, m);
        int const A = static_cast<int>(gen.between(0, G->h() - 1));
        EXPECT_EQ(b_coeff(*G, N, k, A, m, aux), oracle::b(*G, N, k, A, m, aux.Q_class))
            << D << " " << N << " " << k << " " << A << " " << m;
    }
}

TEST(Kernel, IndependentOfAuxiliaryChoiceAndOrientation)
{
    support::Gen gen(17);
    auto const Ds = support::fundamental_below(160);
    for (int t = 0; t < 80; ++t) {
        i64 const D = gen.pick(Ds);
        auto const G = support::group(D);
        i64 const N = gen.pick(support::inert_primes(D, 2, 60));
        i64 const m = gen.between(1, 10);
        int const k = static_cast<int>(gen.between(1, 3));
        auto const a0 = auxiliary_prime(*G, N, m);
        auto const a1 = auxiliary_prime(*G, N, m, Orientation::direct, 2);
        auto const a2 = auxiliary_prime(*G, N, m, Orientation::inverse, 1);
        for (int A = 0; A < G->h(); ++A) {
            auto const b = b_coeff(*G, N, k, A, m, a0);
            EXPECT_EQ(b, b_coeff(*G, N, k, A, m, a1));
            EXPECT_EQ(b, b_coeff(*G, N, k, A, m, a2));
        }
    }
}

TEST(Kernel, CuspidalProjection)
{
    auto const G = support::group(23);
    for (i64 N : {5, 7, 11, 17}) {
        KernelSeries const s1(G, N, 1, 20);
        KernelSeries const s2(G, N, 2, 20);
        for (int A = 0; A < G->h(); ++A)
            for (i64 m = 1; m <= 20; ++m) {
                EXPECT_EQ(s1.cusp(A, m), Rational(s1.b(A, m) - b_zero(*G) / eisenstein_coeff(N, 0) * oracle::sigma_N(N, m)));
                EXPECT_EQ(s2.cusp(A, m), s2.b(A, m));
                EXPECT_EQ(s1.cusp(A, m), g_cusp_coeff(*G, N, 1, A, m, s1.aux()));
            }
        // the cuspidal part has no constant term
        for (int A = 0; A < G->h(); ++A) EXPECT_EQ(s1.cusp(A, 0), 0);
    }
}

TEST(Kernel, SeriesMatchesPointwise)
{
    auto const G = support::group(39);
    KernelSeries const s(G, 7, 2, 15);
    EXPECT_GT(s.aux().q, 15);
    for (int A = 0; A < G->h(); ++A)
        for (i64 m = 0; m <= 15; ++m) EXPECT_EQ(s.b(A, m), b_coeff(*G, 7, 2, A, m, s.aux()));
    EXPECT_THROW(s.b(0, 16), std::out_of_range);
    EXPECT_EQ(error_code([&] {
                  KernelSeries(G, 7, 2, 15, Orientation::direct, ConstantTerm::brandt, s.aux(), {{1}});
              }),
              ErrorCode::dimension_mismatch);
}

TEST(Kernel, AuxiliaryConsistencyChecks)
{
    auto const G = support::group(23);
    auto const aux = auxiliary_prime(*G, 5, 1);
    EXPECT_EQ(error_code([&] { b_coeff(*G, 7, 1, 0, 1, aux); }), ErrorCode::inconsistent_auxiliary);
    EXPECT_EQ(error_code([&] { b_coeff(*G, 5, 1, 0, aux.q, aux); }), ErrorCode::inconsistent_auxiliary);
    auto bad = aux;
    bad.q += 1;
    EXPECT_EQ(error_code([&] { b_coeff(*G, 5, 1, 0, 1, bad); }), ErrorCode::inconsistent_auxiliary);
    bad = aux;
    bad.Q_class = 0;
    EXPECT_EQ(error_code([&] { b_coeff(*G, 5, 1, 0, 1, bad); }), ErrorCode::inconsistent_auxiliary);
    EXPECT_EQ(error_code([&] { b_coeff(*G, 5, 0, 0, 1, aux); }), ErrorCode::invalid_parameters);
}
