#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracle.hpp"
#include "rsavg/brandt.hpp"
#include "testing.hpp"

using namespace rsavg;
using support::error_code;

namespace {

// Eichler: class number of a maximal order ramified at N.
Rational eichler_class_number(i64 N)
{
    if (N == 2 || N == 3) return 1;
    return make_rational(N - 1, 12) + make_rational(1 - kronecker(-3, N), 3) + make_rational(1 - kronecker(-4, N), 4);
}

RationalMatrix as_matrix(SmallMatrix const & m)
{
    RationalMatrix r(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(static_cast<long>(m[i][j]));
    return r;
}

BrandtModule const & cached(i64 N)
{
    static std::map<i64, BrandtModule> modules;
    auto it = modules.find(N);
    if (it == modules.end()) it = modules.emplace(N, build_module(N, 30)).first;
    return it->second;
}

}  // namespace

TEST(MaximalOrder, DiscriminantIsN)
{
    for (i64 N : primes_in(2, 400)) {
        auto const O = maximal_order(N);
        auto const g = norm_gram(O);
        RationalMatrix r(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) r(i, j) = Rational(g[i][j]);
        EXPECT_EQ(determinant(r), N * N) << N;
        EXPECT_TRUE(O.lattice.contains(qelem(1)));
        EXPECT_EQ(ideal_norm(O, O.lattice), 1);
    }
    EXPECT_EQ(error_code([] { maximal_order(1); }), ErrorCode::invalid_parameters);
    EXPECT_EQ(error_code([] { maximal_order(9); }), ErrorCode::invalid_parameters);
}

TEST(Brandt, FrozenModules)
{
    std::vector<std::pair<i64, std::vector<i64>>> const weights{
        {2, {12}}, {3, {6}}, {5, {3}}, {7, {2}}, {11, {2, 3}}, {13, {1}}, {17, {3, 1}}, {23, {2, 1, 3}}};
    for (auto const & [N, w] : weights) EXPECT_EQ(cached(N).weights(), w) << N;
    EXPECT_EQ(cached(11).B(2), (SmallMatrix{{1, 2}, {3, 0}}));
    EXPECT_EQ(cached(3).mass(), make_rational(1, 6));
    for (auto const & [N, h] : std::vector<std::pair<i64, std::size_t>>{{37, 3}, {41, 4}, {73, 6}, {97, 8}})
        EXPECT_EQ(cached(N).size(), h);
}

TEST(Brandt, ClassNumberAndMass)
{
    for (i64 N : primes_in(2, 110)) {
        auto const & M = cached(N);
        EXPECT_EQ(Rational(static_cast<long>(M.size())), eichler_class_number(N)) << N;
        EXPECT_EQ(M.mass(), make_rational(N - 1, 12)) << N;
        for (std::size_t j = 0; j < M.size(); ++j) EXPECT_EQ(M.right_order(j).covolume(), M.order().lattice.covolume());
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = i + 1; j < M.size(); ++j)
                EXPECT_FALSE(ideals_equivalent(M.order(), M.ideals()[i], M.ideals()[j]));
    }
}

TEST(Brandt, MatrixIdentities)
{
    for (i64 N : {11, 23, 37, 41, 43, 73}) {
        auto const & M = cached(N);
        std::size_t const n = M.size();
        EXPECT_EQ(as_matrix(M.B(1)), RationalMatrix::identity(n));
        for (i64 m = 1; m <= 30; ++m) {
            auto const & B = M.B(m);
            for (std::size_t i = 0; i < n; ++i) {
                i64 row = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    row += B[i][j];
                    EXPECT_EQ(M.weights()[j] * B[i][j], M.weights()[i] * B[j][i]);
                }
                if (m % N != 0) EXPECT_EQ(row, oracle::sigma_N(N, m)) << N << " " << m;
            }
            EXPECT_EQ(M.hecke(m, M.eisenstein()), [&] {
                auto e = M.eisenstein();
                for (auto & x : e) x *= oracle::sigma_N(N, m);
                return e;
            }()) << N << " " << m;
        }
        for (i64 a = 1; a <= 6; ++a)
            for (i64 b = 1; a * b <= 30; ++b)
                if (std::gcd(a, b) == 1) EXPECT_EQ(as_matrix(M.B(a)) * as_matrix(M.B(b)), as_matrix(M.B(a * b)));
        for (i64 p : {2, 3, 5}) {
            if (p == N) continue;
            EXPECT_EQ(as_matrix(M.B(p)) * as_matrix(M.B(p)),
                      as_matrix(M.B(p * p)) + Rational(static_cast<long>(p)) * as_matrix(M.B(1)));
        }
    }
}

TEST(Brandt, RebuildFromStoredData)
{
    auto const & M = cached(23);
    BrandtModule const again(23, M.M_max(), M.ideals(), M.weights(), M.matrices());
    EXPECT_EQ(again.norms(), M.norms());
    EXPECT_EQ(error_code([&] { BrandtModule(23, M.M_max(), M.ideals(), {1}, M.matrices()); }),
              ErrorCode::dimension_mismatch);
    EXPECT_EQ(error_code([] { build_module(97, 5, BrandtOptions{1}); }), ErrorCode::enumeration_bound);
    EXPECT_THROW(M.B(31), std::out_of_range);
}

TEST(Brandt, HeckeEigenvalues)
{
    auto const s11 = eigen_split(cached(11));
    ASSERT_EQ(s11.cuspidal.size(), 1u);
    EXPECT_TRUE(s11.residual.empty());
    std::map<i64, Rational> const a11{{2, -2}, {3, -1}, {5, 1}, {7, -2}};
    for (auto const & [p, ap] : s11.cuspidal[0].eigenvalues)
        if (a11.count(p)) EXPECT_EQ(ap, a11.at(p)) << p;

    auto const s37 = eigen_split(cached(37));
    ASSERT_EQ(s37.cuspidal.size(), 2u);
    std::set<std::pair<Rational, Rational>> seen;
    for (auto const & f : s37.cuspidal) {
        std::map<i64, Rational> ev(f.eigenvalues.begin(), f.eigenvalues.end());
        seen.emplace(ev.at(2), ev.at(3));
    }
    EXPECT_EQ(seen, (std::set<std::pair<Rational, Rational>>{{-2, -3}, {0, 1}}));
}

TEST(GrossPoints, FrozenAndSummingToClassNumber)
{
    auto const c = gross_points(cached(11), *support::group(3));
    EXPECT_EQ(c.c, (std::vector<i64>{0, 1}));
    for (i64 D : support::fundamental_below(60))
        for (i64 N : support::inert_primes(D, 2, 60)) {
            auto const g = gross_points(cached(N), *support::group(D));
            i64 s = 0;
            for (i64 x : g.c) s += x;
            EXPECT_EQ(s, support::group(D)->h()) << D << " " << N;
        }
    EXPECT_EQ(error_code([] { gross_points(cached(11), *support::group(7)); }), ErrorCode::precondition_violated);
}

TEST(GrossPoints, HeightPairingSide)
{
    for (i64 D : support::fundamental_below(50)) {
        auto const G = support::group(D);
        for (i64 N : support::inert_primes(D, 2, 75))
            for (i64 m = 1; m <= 12; ++m) {
                if (m % N == 0) continue;
                auto const cmp = verify_average(cached(N), *G, m);
                EXPECT_TRUE(cmp.equal) << D << " " << N << " " << m << ": " << cmp.left << " vs " << cmp.right;
                EXPECT_EQ(cmp.eisenstein, make_rational(12 * G->h() * G->h() * oracle::sigma_N(N, m), N - 1));
                EXPECT_EQ(cmp.cusp, cmp.left - cmp.eisenstein);
            }
    }
    EXPECT_EQ(error_code([] { verify_average(cached(11), *support::group(3), 11); }), ErrorCode::precondition_violated);
}

TEST(GrossPoints, CentralValueRatio)
{
    auto const & M = cached(11);
    auto const G = support::group(3);
    auto const split = eigen_split(M);
    EXPECT_EQ(central_value_ratio(M, *G, split.cuspidal[0].vector), make_rational(1, 5));
    EXPECT_EQ(error_code([&] { central_value_ratio(M, *G, M.eisenstein()); }), ErrorCode::not_cuspidal);
    EXPECT_EQ(height_pairing(M, M.eisenstein(), M.eisenstein()), M.mass());
}
