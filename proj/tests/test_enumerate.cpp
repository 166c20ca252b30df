#include <gtest/gtest.h>

#include <map>

#include "quadric/enumerate.hpp"
#include "quadric/errors.hpp"
#include "quadric/ring.hpp"

using namespace quadric;

namespace {

// Coefficients of Π 1/(1 - x^{d_i}) by repeated polynomial division.
std::vector<std::size_t> series(const std::vector<int>& degrees, int top) {
    std::vector<std::size_t> c(static_cast<std::size_t>(top) + 1, 0);
    c[0] = 1;
    for (int d : degrees)
        for (int k = d; k <= top; ++k)
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - d)];
    return c;
}

}  // namespace

TEST(Enumerate, CountsMatchGeneratingFunction) {
    for (auto [fam, rank] : {std::pair{Family::BO, 6}, {Family::BGO_even, 6}, {Family::BGO_odd, 5},
                             {Family::BGL, 4}, {Family::TodaA, 6}}) {
        RingPtr ring = make_ring(fam, rank);
        std::vector<int> degrees;
        for (const auto& v : ring->vars())
            degrees.push_back(v.degree);
        const auto want = series(degrees, 20);
        for (int d = 0; d <= 20; ++d) {
            const auto monos = enumerate_monomials(*ring, d);
            EXPECT_EQ(monos.size(), want[static_cast<std::size_t>(d)]) << ring->describe() << " " << d;
            EXPECT_EQ(count_monomials(*ring, d), monos.size());
            for (std::size_t i = 1; i < monos.size(); ++i)
                EXPECT_TRUE(monos[i - 1] > monos[i]);
            for (const auto& m : monos)
                EXPECT_EQ(monomial_degree(*ring, m), d);
        }
    }
}

TEST(Enumerate, FilterRestrictsVariables) {
    RingPtr go = make_ring(Family::BGO_even, 4);
    std::vector<bool> allowed(go->size(), true);
    allowed[go->lambda()] = false;
    for (int d = 0; d <= 12; ++d)
        for (const auto& m : enumerate_monomials(*go, d, allowed))
            EXPECT_EQ(m.exps[go->lambda()], 0);
    EXPECT_EQ(count_monomials(*go, 2, allowed), 1u);  // a1^2
}

TEST(Enumerate, AboveCapThrows) {
    RingPtr bo = make_ring(Family::BO, 2, 12);
    EXPECT_THROW(enumerate_monomials(*bo, 13), DegreeCapExceeded);
}
