#include <gtest/gtest.h>

#include "quadric/errors.hpp"
#include "quadric/expr.hpp"
#include "quadric/go_even.hpp"
#include "quadric/gysin.hpp"
#include "quadric/maps.hpp"
#include "support.hpp"

using namespace quadric;
using quadric::testing::kCases;
using quadric::testing::Random;

namespace {
Polynomial P(const RingPtr& r, std::string_view s) { return parse_polynomial(s, r); }
}  // namespace

TEST(Gysin, FactorizationReassembles) {
    Random rnd(41);
    RingPtr bo = make_ring(Family::BO, 6);
    for (int k = 0; k < kCases; ++k) {
        const Monomial m = rnd.monomial(bo, 0, 20);
        const auto f = factorize(*bo, m);
        EXPECT_EQ(f.reassemble(*bo), m);
    }
}

TEST(Gysin, DerivationOnGenerators) {
    RingPtr bo = make_ring(Family::BO, 4);
    EXPECT_EQ(derivation_s(P(bo, "w2")), P(bo, "w1"));
    EXPECT_EQ(derivation_s(P(bo, "w4")), P(bo, "w3"));
    EXPECT_TRUE(derivation_s(P(bo, "w1")).is_zero());
    EXPECT_TRUE(derivation_s(P(bo, "w2^2")).is_zero());
}

TEST(Gysin, EvenOnSimpleClasses) {
    RingPtr bo = make_ring(Family::BO, 2);
    RingPtr go = make_ring(Family::BGO_even, 2);
    EXPECT_EQ(gysin_d_even(P(bo, "w2")), P(go, "a1"));
    EXPECT_TRUE(gysin_d_even(P(bo, "w1")).is_zero());
}

TEST(Gysin, BoundaryRequiresValidInput) {
    RingPtr go3 = make_ring(Family::BGO_odd, 3);
    EXPECT_THROW(boundary_odd_to_even(P(go3, "wh2"), 2), PreconditionViolation);
    EXPECT_THROW(boundary_odd_to_even(P(go3, "c")), PreconditionViolation);
    RingPtr go4 = make_ring(Family::BGO_even, 4);
    EXPECT_THROW(boundary_odd_to_even(P(go4, "a1")), ContextMismatch);
}

TEST(GysinProperty, DerivationSquaresToZero) {
    Random rnd(42);
    for (int k = 0; k < kCases; ++k) {
        RingPtr bo = make_ring(Family::BO, 2 * rnd.uniform(1, 3));
        const Polynomial p = rnd.any(bo, 12);
        EXPECT_TRUE(derivation_s(derivation_s(p)).is_zero());
    }
}

TEST(GysinProperty, DerivationLeibniz) {
    Random rnd(43);
    for (int k = 0; k < kCases; ++k) {
        RingPtr bo = make_ring(Family::BO, 2 * rnd.uniform(1, 3));
        const Polynomial p = rnd.any(bo, 8), q = rnd.any(bo, 8);
        EXPECT_EQ(derivation_s(p * q), derivation_s(p) * q + p * derivation_s(q));
    }
}

TEST(GysinProperty, PistarAfterGysinIsDerivation) {
    for (int n = 1; n <= 3; ++n) {
        RingPtr bo = make_ring(Family::BO, 2 * n);
        const HomMap pi = pistar_even(n);
        for (int d = 0; d <= 14; ++d)
            for (const Monomial& m : enumerate_monomials(*bo, d)) {
                const Polynomial x = Polynomial::monomial(bo, m);
                ASSERT_EQ(pi(gysin_d_even(x)), derivation_s(x)) << x.str();
            }
    }
}

TEST(GysinProperty, SquaresAreCycles) {
    Random rnd(44);
    for (int k = 0; k < kCases; ++k) {
        const int n = rnd.uniform(1, 3);
        const Polynomial p = rnd.any(make_ring(Family::BO, 2 * n), 6);
        const Polynomial q = rnd.any(make_ring(Family::BO, 2 * n + 1), 6);
        EXPECT_TRUE(psi_embed(gysin_d_even(p.square())).is_zero());
        EXPECT_TRUE(gysin_d_odd(q.square()).is_zero());
    }
}

TEST(GysinProperty, ModuleOverBase) {
    Random rnd(45);
    for (int k = 0; k < kCases; ++k) {
        const int n = rnd.uniform(1, 3);
        RingPtr go = make_ring(Family::BGO_even, 2 * n);
        RingPtr bo = make_ring(Family::BO, 2 * n);
        const Polynomial x = rnd.any(go, 6, 3), y = rnd.any(bo, 6, 3);
        EXPECT_TRUE(eq_go_even(gysin_d_even(pistar_even(go)(x) * y), x * gysin_d_even(y)));
    }
}

TEST(GysinProperty, ParityZeroGivesZero) {
    Random rnd(46);
    for (int k = 0; k < kCases; ++k) {
        const int n = rnd.uniform(1, 2);
        RingPtr odd = make_ring(Family::BGO_odd, 2 * n + 1);
        RingPtr even = make_ring(Family::BGO_even, 2 * n + 2);
        std::vector<bool> no_c(odd->size(), true);
        no_c[odd->c()] = false;
        const Polynomial h = Polynomial::monomial(
            odd, enumerate_monomials(*odd, 3, no_c).front());
        EXPECT_TRUE(boundary_odd_to_even(h, 0).is_zero());
        EXPECT_TRUE(boundary_even_to_odd(rnd.any(even, 6), 0).is_zero());
    }
}
