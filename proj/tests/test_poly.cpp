#include <gtest/gtest.h>

#include "quadric/errors.hpp"
#include "quadric/hom_map.hpp"
#include "quadric/ring.hpp"
#include "support.hpp"

using namespace quadric;
using quadric::testing::kCases;
using quadric::testing::Random;

TEST(Ring, GoEvenRank4Variables) {
    RingPtr go = make_ring(Family::BGO_even, 4);
    std::vector<std::string> names;
    for (const auto& v : go->vars())
        names.push_back(v.name + ":" + std::to_string(v.degree));
    EXPECT_EQ(names, (std::vector<std::string>{"lambda:2", "a1:1", "a3:3", "b4:4", "b8:8",
                                               "d{1,2}:5"}));
}

TEST(Ring, OddFamiliesAndLookups) {
    RingPtr go3 = make_ring(Family::BGO_odd, 3);
    EXPECT_EQ(go3->var(go3->what(2)).name, "wh2");
    EXPECT_EQ(go3->var(go3->c()).degree, 2);
    RingPtr bo = make_ring(Family::BO, 5);
    EXPECT_EQ(bo->size(), 5u);
    EXPECT_THROW(bo->index_of("w9"), UnboundVariable);
    EXPECT_EQ(make_ring(Family::BO, 5), bo);
}

TEST(Ring, MaskHelpers) {
    EXPECT_EQ(d_name(mask_of({1, 3})), "d{1,3}");
    EXPECT_EQ(mask_size(mask_of({2, 4, 5})), 3);
    EXPECT_EQ(mask_sum(mask_of({2, 4, 5})), 11);
    EXPECT_EQ(mask_elements(mask_of({5, 2})), (std::vector<int>{2, 5}));
}

TEST(Ring, OversizedRanksAreRejected) {
    EXPECT_THROW(make_ring(Family::BGO_even, 40), UnsupportedRank);
    EXPECT_THROW(make_ring(Family::BO, 65), UnsupportedRank);
}

TEST(Polynomial, CancellationAndFormatting) {
    RingPtr go = make_ring(Family::BGO_even, 4);
    const Polynomial a1 = Polynomial::variable(go, "a1");
    const Polynomial b4 = Polynomial::variable(go, "b4");
    const Polynomial lambda = Polynomial::variable(go, "lambda");
    EXPECT_TRUE((a1 + a1).is_zero());
    EXPECT_EQ((a1 * a1 * lambda + lambda * b4).str(), "lambda*b4 + lambda*a1^2");
    EXPECT_EQ(Polynomial::zero(go).str(), "0");
    EXPECT_EQ(Polynomial::one(go).str(), "1");
    EXPECT_EQ((a1 + Polynomial::one(go)).pow(2), a1 * a1 + Polynomial::one(go));
}

TEST(Polynomial, DegreeCapIsEnforced) {
    RingPtr bo = make_ring(Family::BO, 2, 10);
    const Polynomial w2 = Polynomial::variable(bo, "w2");
    EXPECT_NO_THROW(w2.pow(5));
    EXPECT_THROW(w2.pow(6), DegreeCapExceeded);
}

TEST(Polynomial, SplitByReassembles) {
    Random rnd(3);
    RingPtr bo = make_ring(Family::BO, 4);
    for (int k = 0; k < kCases; ++k) {
        const Polynomial p = rnd.any(bo, 10);
        const std::size_t v = static_cast<std::size_t>(rnd.uniform(0, 3));
        Polynomial back = Polynomial::zero(bo);
        for (const auto& [e, coeff] : p.split_by(v)) {
            EXPECT_FALSE(coeff.involves(v));
            back += coeff * Polynomial::variable(bo, v, e);
        }
        EXPECT_EQ(back, p);
    }
}

TEST(PolynomialProperty, CommutativeRingAxioms) {
    Random rnd(4);
    RingPtr go = make_ring(Family::BGO_even, 6);
    for (int k = 0; k < kCases; ++k) {
        const Polynomial p = rnd.any(go, 8), q = rnd.any(go, 8), r = rnd.any(go, 8);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ((p + q) + r, p + (q + r));
        EXPECT_TRUE((p + p).is_zero());
    }
}

TEST(PolynomialProperty, FrobeniusSquare) {
    Random rnd(5);
    RingPtr bo = make_ring(Family::BO, 6);
    for (int k = 0; k < kCases; ++k) {
        const Polynomial p = rnd.any(bo, 10), q = rnd.any(bo, 10);
        EXPECT_EQ(p.square(), p * p);
        EXPECT_EQ((p + q).square(), p.square() + q.square());
    }
}

TEST(PolynomialProperty, TermsStayStrictlyDescending) {
    Random rnd(6);
    RingPtr go = make_ring(Family::BGO_odd, 5);
    for (int k = 0; k < kCases; ++k) {
        const Polynomial p = rnd.any(go, 9) * rnd.any(go, 9) + rnd.any(go, 9);
        const auto& t = p.terms();
        for (std::size_t i = 1; i < t.size(); ++i)
            EXPECT_TRUE(t[i - 1] > t[i]);
    }
}

TEST(HomMapTest, UnboundGeneratorThrows) {
    RingPtr bo = make_ring(Family::BO, 2);
    HomMap m(bo, bo);
    m.set("w1", Polynomial::variable(bo, "w2"));
    EXPECT_EQ(m(Polynomial::variable(bo, "w1", 2)), Polynomial::variable(bo, "w2", 2));
    EXPECT_THROW(m(Polynomial::variable(bo, "w2")), UnboundVariable);
}

TEST(HomMapProperty, CompositionIsSubstitution) {
    Random rnd(7);
    RingPtr bo = make_ring(Family::BO, 3);
    for (int k = 0; k < kCases; ++k) {
        HomMap f(bo, bo), g(bo, bo);
        for (std::size_t v = 0; v < bo->size(); ++v) {
            const int deg = bo->var(v).degree;
            f.set(v, rnd.homogeneous(bo, deg, deg, 3));
            g.set(v, rnd.homogeneous(bo, deg, deg, 3));
        }
        const Polynomial p = rnd.any(bo, 6, 3);
        EXPECT_EQ(compose(g, f)(p), g(f(p)));
        EXPECT_EQ(f(p * p), f(p) * f(p));
        EXPECT_TRUE(f.preserves_degree());
    }
}

TEST(Convert, ByVariableName) {
    RingPtr bo = make_ring(Family::BO, 2);
    RingPtr bo4 = make_ring(Family::BO, 4);
    const Polynomial p = Polynomial::variable(bo, "w1") * Polynomial::variable(bo, "w2");
    EXPECT_EQ(convert(p, bo4).str(), "w1*w2");
    EXPECT_THROW(convert(Polynomial::variable(bo4, "w3"), bo), UnboundVariable);
}
