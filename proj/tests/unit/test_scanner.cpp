#include <gtest/gtest.h>

#include <algorithm>

#include "rsavg/scanner.hpp"
#include "testing.hpp"

using namespace rsavg;
using support::error_code;

namespace {

bool has(std::vector<std::string> const & v, std::string const & s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// (h/u)(1 - delta 12 (h/u)/(N-1)), computed from scratch.
Rational stable_value(i64 D, i64 N, bool delta)
{
    i64 const h = support::group(D)->h(), u = D == 3 ? 3 : 1;
    Rational const hu = make_rational(h, u);
    return delta ? Rational(hu * (1 - 12 * hu / (N - 1))) : hu;
}

}  // namespace

TEST(Positivity, GenusZeroLevelsVanish)
{
    for (auto const & [D, N] : std::vector<std::pair<i64, i64>>{{3, 5}, {7, 13}}) {
        auto const G = support::group(D);
        auto const r = positivity_certificate(*G, N, 1, characters(G).front());
        EXPECT_EQ(r.value, 0);
        EXPECT_FALSE(r.verdict);
        EXPECT_TRUE(has(r.narrative, "delta=1"));
        EXPECT_TRUE(has(r.narrative, "h<(N-1)/12=false"));
    }
}

TEST(Positivity, MatchesClosedForm)
{
    for (i64 D : support::fundamental_below(80)) {
        auto const G = support::group(D);
        auto const chars = characters(G);
        for (i64 N : support::inert_primes(D, D + 1, 200))
            for (int k : {1, 2, 4}) {
                auto const r = positivity_certificate(*G, N, k, chars.front());
                Rational const v = stable_value(D, N, k == 1);
                EXPECT_EQ(r.value, v);
                EXPECT_EQ(r.verdict, v > 0);
                if (chars.size() > 1) EXPECT_EQ(positivity_certificate(*G, N, 1, chars[1]).value, make_rational(G->h(), G->u()));
            }
    }
    auto const G = support::group(23);
    EXPECT_EQ(error_code([&] { positivity_certificate(*G, 5, 1, characters(G).front()); }), ErrorCode::precondition_violated);
}

TEST(ModP, ValuationVerdict)
{
    auto const G = support::group(23);
    auto const triv = characters(G).front();
    // value 3 (1 - 36/42) = 3/7
    auto const r5 = mod_p_certificate(*G, 43, 1, triv, 5);
    EXPECT_EQ(r5.value, make_rational(3, 7));
    EXPECT_EQ(r5.p_valuation, 0);
    EXPECT_TRUE(r5.verdict);
    auto const r7 = mod_p_certificate(*G, 43, 1, triv, 7);
    EXPECT_EQ(r7.p_valuation, -1);
    EXPECT_FALSE(r7.verdict);
    EXPECT_EQ(error_code([&] { mod_p_certificate(*G, 43, 1, triv, 3); }), ErrorCode::precondition_violated);   // p | h
    EXPECT_EQ(error_code([&] { mod_p_certificate(*G, 43, 1, triv, 23); }), ErrorCode::precondition_violated);  // p | D
    EXPECT_EQ(error_code([&] { mod_p_certificate(*G, 43, 2, triv, 5); }), ErrorCode::precondition_violated);   // p <= 2k+1
}

TEST(ModP, FallbackBranches)
{
    auto const G7 = support::group(7);
    // X = 1 - 12/72 = 5/6, so p = 5 forces the m = p branch; 5 is inert in Q(sqrt(-7))
    auto const r = mod_p_fallback(*G7, 73, 5);
    EXPECT_TRUE(has(r.narrative, "branch=mp"));
    EXPECT_TRUE(has(r.narrative, "splitting=inert"));
    EXPECT_EQ(r.value, -1);
    EXPECT_TRUE(r.verdict);
    auto const r1 = mod_p_fallback(*G7, 131, 11);  // X = 59/65
    EXPECT_TRUE(has(r1.narrative, "branch=m1"));
    EXPECT_EQ(r1.value, make_rational(59, 65));
    EXPECT_EQ(error_code([&] { mod_p_fallback(*G7, 31, 5); }), ErrorCode::precondition_violated);  // N <= pD
    EXPECT_EQ(error_code([&] { mod_p_fallback(*G7, 73, 7); }), ErrorCode::precondition_violated);

    // whichever branch is taken, the verdict is a p-unit statement about r.value
    for (i64 D : support::fundamental_below(40)) {
        auto const G = support::group(D);
        for (i64 p : {5, 7, 11, 13}) {
            if (D % p == 0 || G->h() % p == 0) continue;
            for (i64 N : support::inert_primes(D, p * D + 1, p * D + 400)) {
                auto const c = mod_p_fallback(*G, N, p);
                EXPECT_EQ(c.verdict, c.value != 0 && p_valuation(c.value, p) == 0);
            }
        }
    }
}

TEST(EisensteinFilter, Divisibility)
{
    EXPECT_FALSE(eisenstein_filter(5, 11));
    EXPECT_TRUE(eisenstein_filter(7, 11));
    EXPECT_FALSE(eisenstein_filter(11, 11));
    for (i64 N : primes_in(5, 300))
        for (i64 p : {5, 7, 11}) EXPECT_EQ(eisenstein_filter(p, N), (N % p) * ((N * N - 1) % p) % p != 0);
}

TEST(LevelScan, ReportsFilteredInertLevels)
{
    auto const G = support::group(23);
    auto const reports = theorem6_scan(*G, 5, 2, 400);
    ASSERT_FALSE(reports.empty());
    for (auto const & r : reports) {
        EXPECT_TRUE(support::inert(23, r.N));
        EXPECT_GT(r.N, 23);
        EXPECT_TRUE(eisenstein_filter(5, r.N));
        EXPECT_EQ(r.k, 1);
    }
    EXPECT_EQ(error_code([&] { theorem6_scan(*G, 3, 2, 100); }), ErrorCode::precondition_violated);
    EXPECT_EQ(error_code([&] { theorem6_scan(*G, 23, 2, 100); }), ErrorCode::precondition_violated);
}
