#include <gtest/gtest.h>

#include "rsavg/repnum.hpp"
#include "testing.hpp"

using namespace rsavg;
using support::error_code;

TEST(Representations, MatchBruteForce)
{
    for (i64 D : support::fundamental_below(160)) {
        auto const G = support::group(D);
        for (auto const & f : G->elements())
            for (i64 m = 0; m <= 60; ++m)
                EXPECT_EQ(form_representations(f, D, m), support::brute_representations(f.a, f.b, f.c, m))
                    << f.to_string() << " m=" << m;
    }
}

TEST(Representations, FrozenSmallValues)
{
    auto const G3 = support::group(3);
    EXPECT_EQ(form_representations(G3->form(0), 3, 1), 6);
    EXPECT_EQ(form_representations(G3->form(0), 3, 7), 12);
    EXPECT_EQ(r_class(*G3, 0, 0), make_rational(1, 6));
    EXPECT_EQ(r_class(*G3, 0, 2), 0);
    EXPECT_EQ(r_class(*G3, 0, 3), 1);
    auto const G23 = support::group(23);
    // x^2 + xy + 6y^2 and 2x^2 +- xy + 3y^2; 2 and 3 both split
    EXPECT_EQ(r_class(*G23, 0, 6), 2);
    EXPECT_EQ(r_class(*G23, 1, 2) + r_class(*G23, 2, 2), 2);
}

TEST(Representations, AgreeWithIdealEnumeration)
{
    support::Gen gen(7);
    auto const Ds = support::fundamental_below(400);
    for (int t = 0; t < 400; ++t) {
        i64 const D = gen.pick(Ds);
        auto const G = support::group(D);
        i64 const m = gen.between(1, 300);
        for (int A = 0; A < G->h(); ++A) {
            EXPECT_EQ(r_class(*G, A, m), r_class_oracle(*G, A, m, Orientation::direct)) << D << " " << A << " " << m;
            EXPECT_EQ(r_class(*G, A, m), r_class_oracle(*G, A, m, Orientation::inverse));
        }
    }
}

TEST(Representations, TotalCountsIdeals)
{
    for (i64 D : support::fundamental_below(200))
        for (i64 m = 1; m <= 80; ++m) EXPECT_EQ(R_total(*support::group(D), m), support::ideal_count(D, m)) << D << " " << m;
}

TEST(Representations, InvariantUnderMultiplicationByD)
{
    for (i64 D : support::fundamental_below(120)) {
        auto const G = support::group(D);
        for (int A = 0; A < G->h(); ++A)
            for (i64 m = 1; m <= 30; ++m) EXPECT_EQ(r_class(*G, A, D * m), r_class(*G, A, m));
    }
}

TEST(Representations, InverseClassesAgree)
{
    for (i64 D : support::fundamental_below(300)) {
        auto const G = support::group(D);
        for (int A = 0; A < G->h(); ++A)
            for (i64 m = 1; m <= 40; ++m) EXPECT_EQ(r_class(*G, A, m), r_class(*G, G->inverse(A), m));
    }
}

TEST(Representations, CharacterSums)
{
    for (i64 D : {23, 39, 47, 71}) {
        auto const G = support::group(D);
        for (auto const & psi : characters(G)) {
            EXPECT_EQ(r_psi(*G, psi, 0).is_zero(), !psi.is_trivial());
            for (i64 m = 1; m <= 50; ++m) {
                // r_A = r_{A^-1} makes the twisted and conjugate-twisted sums equal
                EXPECT_EQ(theta_coefficient(*G, psi, m), r_psi(*G, psi, m));
                CyclotomicValue expect(psi.order());
                for (int A = 0; A < G->h(); ++A) expect += psi.value(A) * Rational(support::brute_representations(G->form(A).a, G->form(A).b, G->form(A).c, m));
                expect *= make_rational(1, G->w());
                EXPECT_EQ(r_psi(*G, psi, m), expect);
            }
        }
    }
}

TEST(RepTable, MatchesDirectComputation)
{
    auto const G = support::group(47);
    RepTable const t(G, 100);
    for (int A = 0; A < G->h(); ++A)
        for (i64 m = 0; m <= 100; ++m) EXPECT_EQ(t.r(A, m), r_class(*G, A, m));
    for (i64 m = 0; m <= 100; ++m) EXPECT_EQ(t.R(m), R_total(*G, m));
    for (auto const & psi : characters(G))
        for (i64 m = 0; m <= 100; ++m) EXPECT_EQ(t.r_psi(psi, m), r_psi(*G, psi, m));
    EXPECT_THROW(t.r(0, 101), std::out_of_range);
}

TEST(RepTable, RejectsMalformedRows)
{
    auto const G = support::group(23);
    EXPECT_EQ(error_code([&] { RepTable(G, 3, {{1, 2, 3, 4}}); }), ErrorCode::dimension_mismatch);
    EXPECT_EQ(error_code([&] {
                  RepTable(G, 3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(2)));
              }),
              ErrorCode::dimension_mismatch);
    EXPECT_EQ(sigma_N(5, 10), 3);
}
