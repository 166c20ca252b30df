#include <gtest/gtest.h>

#include "quadric/binomial.hpp"
#include "quadric/errors.hpp"
#include "quadric/expr.hpp"
#include "quadric/toda.hpp"
#include "support.hpp"

using namespace quadric;
using quadric::testing::kCases;
using quadric::testing::Random;

namespace {
Polynomial P(const RingPtr& r, std::string_view s) { return parse_polynomial(s, r); }
}  // namespace

TEST(Toda, ContextParameters) {
    const TodaContext& c6 = toda_context(make_ring(Family::TodaA, 6));
    EXPECT_EQ(c6.N(), 6);
    EXPECT_EQ(c6.q(), 2);
    EXPECT_EQ(c6.h(), 3);
    const TodaContext& c12 = toda_context(make_ring(Family::TodaA, 12));
    EXPECT_EQ(c12.q(), 4);
}

TEST(Toda, CoactionFormula) {
    for (int N = 1; N <= 8; ++N) {
        RingPtr a = make_ring(Family::TodaA, N);
        const TodaContext& ctx = toda_context(a);
        const Polynomial t = Polynomial::variable(ctx.extended(), ctx.coaction_var());
        for (int r = 1; r <= N; ++r) {
            Polynomial want = Polynomial::zero(ctx.extended());
            for (int i = 0; i <= r; ++i)
                if (binom_mod2(N - i, r - i))
                    want += t.pow(static_cast<unsigned>(r - i)) *
                            (i == 0 ? Polynomial::one(ctx.extended())
                                    : convert(ctx.x(i), ctx.extended()));
            EXPECT_EQ(ctx.coaction(ctx.x(r)), want) << "N=" << N << " r=" << r;
        }
    }
}

TEST(Toda, MembershipInB) {
    RingPtr a = make_ring(Family::TodaA, 6);
    EXPECT_TRUE(is_in_B(P(a, "x1")));
    EXPECT_FALSE(is_in_B(P(a, "x2")));
}

TEST(Toda, HatElementsAtSix) {
    const auto hats = hat_elements(6);
    RingPtr a = make_ring(Family::TodaA, 6);
    ASSERT_EQ(hats.size(), 7u);
    EXPECT_EQ(hats[1], P(a, "x1"));
    EXPECT_EQ(hats[2], P(a, "x2"));
    EXPECT_EQ(hats[4], P(a, "x1^2*x2 + x2^2 + x4"));
    EXPECT_EQ(hats[6], P(a, "x1*x2*x3 + x2*x4 + x6"));
    for (int k : {3, 4, 5, 6})
        EXPECT_TRUE(is_in_B(hats[static_cast<std::size_t>(k)])) << k;
    const TodaContext& ctx = toda_context(a);
    EXPECT_EQ(hats[3], ctx.d(hats[4], 1));
    EXPECT_EQ(hats[5], ctx.d(hats[6], 1));
}

TEST(Toda, PsiInverseOfEvenGenerators) {
    RingPtr a = make_ring(Family::TodaA, 6);
    EXPECT_EQ(psi_inverse(P(a, "x4")), hat_elements(6)[4]);
    EXPECT_EQ(psi_inverse(P(a, "x1")), P(a, "x1"));
}

TEST(Toda, RecursionCrossCheckHasNoDiscrepancies) {
    for (int N : {6, 10}) {
        const TodaContext& ctx = toda_context(make_ring(Family::TodaA, N));
        EXPECT_TRUE(ctx.recursion_discrepancies().empty()) << N;
    }
}

TEST(Toda, StarProductStaysInB) {
    const auto hats = hat_elements(6);
    EXPECT_TRUE(is_in_B(star_product(hats[4], hats[4])));
    EXPECT_TRUE(is_in_B(star_product(hats[4], hats[6])));
}

TEST(Toda, GeneratorSets) {
    EXPECT_EQ(toda_generators(2).size(), 1u);
    const GeneratorSet g6 = toda_generators(6);
    EXPECT_EQ(g6.at("alpha_3"), hat_elements(6)[3]);
    EXPECT_TRUE(g6.find("delta_{2,3}"));
    EXPECT_EQ(toda_generators_N4().size(), 3u);
    for (const auto& [label, p] : g6.entries)
        EXPECT_TRUE(primitive_check_A(p)) << label;
}

TEST(TodaProperty, CoactionIsMultiplicative) {
    Random rnd(51);
    for (int k = 0; k < kCases; ++k) {
        RingPtr a = make_ring(Family::TodaA, rnd.uniform(2, 8));
        const Polynomial p = rnd.any(a, 6, 3), q = rnd.any(a, 6, 3);
        EXPECT_EQ(coaction_phi(p * q), coaction_phi(p) * coaction_phi(q));
    }
}

TEST(TodaProperty, PsiInverseInvertsReduction) {
    Random rnd(52);
    RingPtr a = make_ring(Family::TodaA, 6);
    HomMap mod_x2 = HomMap::identity(a);
    mod_x2.set("x2", Polynomial::zero(a));
    for (int k = 0; k < kCases; ++k) {
        const Polynomial p = mod_x2(rnd.homogeneous(a, 1, 9, 3));
        if (p.is_zero())
            continue;
        const Polynomial b = psi_inverse(p);
        EXPECT_TRUE(is_in_B(b)) << p.str();
        EXPECT_EQ(mod_x2(b), p) << p.str();
    }
}
