#include <gtest/gtest.h>

#include "quadric/errors.hpp"
#include "quadric/expr.hpp"
#include "quadric/go_even.hpp"
#include "quadric/maps.hpp"
#include "quadric/primitivity.hpp"
#include "support.hpp"

using namespace quadric;
using quadric::testing::kCases;
using quadric::testing::Random;

namespace {
Polynomial P(const RingPtr& r, std::string_view s) { return parse_polynomial(s, r); }
}  // namespace

TEST(Primitivity, Rank4Witness) {
    RingPtr go = make_ring(Family::BGO_even, 4);
    EXPECT_FALSE(primitive_check(P(go, "b4")));
    EXPECT_EQ(primitivity_defect(P(go, "b4")).str(), "a1^2*t");
    EXPECT_TRUE(primitive_check(P(go, "a1*a3 + b4")));
    EXPECT_TRUE(primitive_check(P(go, "a3^2 + a1*d{1,2}")));
}

TEST(Primitivity, GeneratorSetsPerRank) {
    for (int r = 2; r <= 7; ++r) {
        RingPtr ring = make_ring(r % 2 ? Family::BGO_odd : Family::BGO_even, r);
        const GeneratorSet gs = ph_generators(ring);
        EXPECT_GT(gs.size(), 0u);
        for (const auto& [label, p] : gs.entries)
            EXPECT_TRUE(primitive_check(p)) << r << " " << label;
    }
    EXPECT_THROW(ph_generators(make_ring(Family::BGO_even, 8)), UnsupportedRank);
}

TEST(Primitivity, RankSixConstruction) {
    const auto& rc = rank_4m2_construction(1);
    EXPECT_TRUE(rc.pullbacks_unique);
    std::vector<std::string> labels;
    for (const auto& [label, p] : rc.generators.entries)
        labels.push_back(label);
    EXPECT_EQ(labels, (std::vector<std::string>{"lambda", "alpha'_1", "alpha'_3", "alpha'_5",
                                                "beta'_8", "beta'_12", "delta'_{2,3}"}));
    const HomMap pi = pistar_even(rc.go);
    for (int i = 1; i <= 3; ++i)
        EXPECT_EQ(pi(rc.alpha_prime.at(i)), rc.toda.at("alpha_" + std::to_string(2 * i - 1)));
}

TEST(PrimitivityProperty, ProductsOfPrimitivesArePrimitive) {
    Random rnd(61);
    RingPtr go = make_ring(Family::BGO_even, 4);
    const GeneratorSet gs = ph_generators(go);
    for (int k = 0; k < kCases; ++k) {
        const auto& [la, a] = gs.entries[static_cast<std::size_t>(rnd.uniform(0, 3))];
        const auto& [lb, b] = gs.entries[static_cast<std::size_t>(rnd.uniform(0, 3))];
        EXPECT_TRUE(primitive_check(a * b + b.square())) << la << " " << lb;
    }
}

TEST(PrimitivityProperty, CheckAgreesWithDefect) {
    Random rnd(62);
    for (int k = 0; k < kCases; ++k) {
        const int r = rnd.uniform(2, 5);
        RingPtr ring = make_ring(r % 2 ? Family::BGO_odd : Family::BGO_even, r);
        const Polynomial p = rnd.homogeneous(ring, 1, 8, 3);
        EXPECT_EQ(primitive_check(p), primitivity_defect(p).is_zero()) << p.str();
    }
}
