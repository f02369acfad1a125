#include <gtest/gtest.h>

#include <optional>

#include "rsavg/quadfield.hpp"
#include "testing.hpp"

using namespace rsavg;
using support::error_code;

namespace {

// Analytic class number formula: h = -(u / D) sum_{0 < a < D} chi(a) a.
i64 analytic_class_number(i64 D)
{
    i64 s = 0;
    for (i64 a = 1; a < D; ++a) s += kronecker(-D, a) * a;
    i64 const u = D == 3 ? 3 : 1;
    EXPECT_EQ((-s * u) % D, 0);
    return -s * u / D;
}

}  // namespace

TEST(Discriminant, Validation)
{
    for (i64 D : {3, 7, 11, 15, 23, 35, 163}) EXPECT_TRUE(FundamentalDiscriminant::is_valid(D)) << D;
    for (i64 D : {-3, 0, 1, 4, 5, 8, 27, 63, 99}) {
        EXPECT_FALSE(FundamentalDiscriminant::is_valid(D)) << D;
        EXPECT_EQ(error_code([&] { FundamentalDiscriminant::validate(D); }), ErrorCode::not_fundamental);
    }
}

TEST(ClassGroup, FrozenClassNumbers)
{
    std::vector<std::pair<i64, int>> const table{{3, 1},  {7, 1},  {11, 1}, {15, 2}, {19, 1}, {23, 3},
                                                 {31, 3}, {35, 2}, {39, 4}, {43, 1}, {47, 5}, {71, 7},
                                                 {87, 6}, {95, 8}, {163, 1}, {167, 11}};
    for (auto const & [D, h] : table) EXPECT_EQ(support::group(D)->h(), h) << D;
}

TEST(ClassGroup, ClassNumberFormula)
{
    for (i64 D : support::fundamental_below(600)) EXPECT_EQ(support::group(D)->h(), analytic_class_number(D)) << D;
}

TEST(ClassGroup, FormsAreReducedAndDistinct)
{
    for (i64 D : support::fundamental_below(400)) {
        auto const G = support::group(D);
        EXPECT_EQ(G->form(0).a, 1);
        for (auto const & f : G->elements()) {
            EXPECT_TRUE(f.is_reduced());
            EXPECT_EQ(f.discriminant(), -D);
        }
        for (int i = 0; i < G->h(); ++i) EXPECT_EQ(G->index_of(G->form(i)), i);
    }
}

TEST(ClassGroup, GroupAxioms)
{
    for (i64 D : support::fundamental_below(300)) {
        auto const G = support::group(D);
        int const h = G->h();
        int expo = 1;
        for (int x = 0; x < h; ++x) {
            EXPECT_EQ(G->op(x, 0), x);
            EXPECT_EQ(G->op(x, G->inverse(x)), 0);
            EXPECT_EQ(G->power(x, G->order_of(x)), 0);
            EXPECT_EQ(h % G->order_of(x), 0);
            expo = std::lcm(expo, G->order_of(x));
            for (int y = 0; y < h; ++y) {
                EXPECT_EQ(G->op(x, y), G->op(y, x));
                for (int z = 0; z < h; ++z) EXPECT_EQ(G->op(G->op(x, y), z), G->op(x, G->op(y, z)));
            }
        }
        EXPECT_EQ(G->exponent(), expo);
    }
}

TEST(ClassGroup, CompositionMatchesDirectReduction)
{
    // (a, b, c) composed with itself when gcd(a, b) = 1 is (a^2, b', ...),
    // with b' = b mod 2a and b'^2 = -D mod 4 a^2.
    support::Gen gen(21);
    for (int t = 0; t < 200; ++t) {
        i64 const D = gen.pick(support::fundamental_below(500));
        auto const G = support::group(D);
        int const x = static_cast<int>(gen.between(0, G->h() - 1));
        auto const f = G->form(x);
        if (std::gcd(f.a, f.b) != 1) continue;
        i64 const a2 = f.a * f.a;
        std::optional<i64> found;
        for (i64 b = f.b; b < f.b + 2 * a2 && !found; b += 2 * f.a)
            if (mod_floor(b * b + D, 4 * a2) == 0) found = b;
        ASSERT_TRUE(found.has_value());
        i64 const b2 = *found;
        EXPECT_EQ(G->index_of(a2, b2, (b2 * b2 + D) / (4 * a2)), G->op(x, x));
    }
    EXPECT_EQ(error_code([] { compose({1, 1, 1}, {1, 1, 2}); }), ErrorCode::discriminant_mismatch);
}

TEST(ClassGroup, Splitting)
{
    for (i64 D : support::fundamental_below(200))
        for (i64 p : primes_in(2, 100)) {
            auto const s = splitting_type(FundamentalDiscriminant::validate(D), p);
            int const chi = kronecker(-D, p);
            EXPECT_EQ(s, chi == 0 ? Splitting::ramified : chi == 1 ? Splitting::split : Splitting::inert);
        }
}

TEST(ClassGroup, PrimeIdealClassRepresentsP)
{
    for (i64 D : support::fundamental_below(300)) {
        auto const G = support::group(D);
        for (i64 p : primes_in(2, 60)) {
            if (kronecker(-D, p) == -1) continue;
            auto const & f = G->form(G->prime_ideal_class(p));
            // the form of a class containing an ideal of norm p represents p
            EXPECT_GT(support::brute_representations(f.a, f.b, f.c, p), 0) << D << " " << p;
        }
    }
}

TEST(Characters, OrthogonalityAndMultiplicativity)
{
    for (i64 D : support::fundamental_below(250)) {
        auto const G = support::group(D);
        auto const chars = characters(G);
        ASSERT_EQ(static_cast<int>(chars.size()), G->h());
        EXPECT_TRUE(chars.front().is_trivial());
        for (auto const & psi : chars) {
            EXPECT_NE(std::find(chars.begin(), chars.end(), psi.conj()), chars.end());
            CyclotomicValue s(psi.order());
            for (int A = 0; A < G->h(); ++A) {
                s += psi.value(A);
                for (int B = 0; B < G->h(); ++B) EXPECT_EQ(psi.value(G->op(A, B)), psi.value(A) * psi.value(B));
            }
            EXPECT_EQ(s, CyclotomicValue::embed(psi.is_trivial() ? Rational(G->h()) : Rational(0), psi.order()));
        }
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = i + 1; j < chars.size(); ++j) EXPECT_FALSE(chars[i] == chars[j]);
    }
}

TEST(Characters, SquareClasses)
{
    for (i64 D : support::fundamental_below(300)) {
        auto const G = support::group(D);
        auto const sq = square_classes(*G);
        // |Pic / Pic^2| = 2^{t-1}, t = number of prime divisors of D
        i64 const index = G->h() / static_cast<i64>(sq.size());
        EXPECT_EQ(index, i64{1} << (factorize(D).size() - 1)) << D;
    }
}
