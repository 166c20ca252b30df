#include <gtest/gtest.h>

#include "quadric/gf2.hpp"
#include "support.hpp"

using namespace quadric;
using quadric::testing::kCases;
using quadric::testing::Random;

namespace {

BitVector random_bits(Random& rnd, std::size_t n, int density = 2) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, rnd.uniform(0, density) == 0);
    return v;
}

BitVector apply(std::size_t rows, const std::vector<BitVector>& cols, const BitVector& x) {
    BitVector out(rows);
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (x.get(j))
            out ^= cols[j];
    return out;
}

}  // namespace

TEST(Gf2, SmallSystem) {
    // x0 + x1 = 1, x1 = 1.
    std::vector<BitVector> cols(2, BitVector(2));
    cols[0].set(0);
    cols[1].set(0);
    cols[1].set(1);
    BitVector rhs(2);
    rhs.set(0);
    rhs.set(1);
    Gf2Solver s(2, cols);
    EXPECT_EQ(s.rank(), 2u);
    auto x = s.solve(rhs);
    ASSERT_TRUE(x);
    EXPECT_FALSE(x->get(0));
    EXPECT_TRUE(x->get(1));
}

TEST(Gf2, InconsistentHasNoSolution) {
    std::vector<BitVector> cols(1, BitVector(2));
    cols[0].set(0);
    BitVector rhs(2);
    rhs.set(1);
    EXPECT_FALSE(Gf2Solver(2, cols).solve(rhs));
    LinearSystemGF2 sys{2, cols, rhs};
    EXPECT_FALSE(solve_gf2(sys));
}

TEST(Gf2Property, SolveKernelAndRankNullity) {
    Random rnd(11);
    for (int k = 0; k < kCases; ++k) {
        const std::size_t rows = static_cast<std::size_t>(rnd.uniform(1, 90));
        const std::size_t ncols = static_cast<std::size_t>(rnd.uniform(1, 90));
        std::vector<BitVector> cols;
        for (std::size_t j = 0; j < ncols; ++j)
            cols.push_back(random_bits(rnd, rows, rnd.uniform(1, 6)));
        Gf2Solver s(rows, cols);
        EXPECT_EQ(s.rank() + s.nullity(), ncols);
        const auto kernel = s.kernel_basis();
        EXPECT_EQ(kernel.size(), s.nullity());
        for (const auto& v : kernel) {
            EXPECT_TRUE(v.any());
            EXPECT_FALSE(apply(rows, cols, v).any());
        }
        const BitVector x0 = random_bits(rnd, ncols);
        const BitVector rhs = apply(rows, cols, x0);
        auto x = s.solve(rhs);
        ASSERT_TRUE(x);
        EXPECT_EQ(apply(rows, cols, *x), rhs);
    }
}

// Against exhaustive search on tiny systems: the returned solution is the
// lexicographically smallest, column 0 most significant.
TEST(Gf2Property, LexSmallestAgainstBruteForce) {
    Random rnd(12);
    for (int k = 0; k < kCases; ++k) {
        const std::size_t rows = static_cast<std::size_t>(rnd.uniform(1, 6));
        const std::size_t ncols = static_cast<std::size_t>(rnd.uniform(1, 10));
        std::vector<BitVector> cols;
        for (std::size_t j = 0; j < ncols; ++j)
            cols.push_back(random_bits(rnd, rows));
        const BitVector rhs = random_bits(rnd, rows);
        std::optional<BitVector> best;
        for (std::uint32_t code = 0; code < (1u << ncols); ++code) {
            // Enumerate in lex order: column 0 is the top bit of `code`.
            BitVector x(ncols);
            for (std::size_t j = 0; j < ncols; ++j)
                x.set(j, (code >> (ncols - 1 - j)) & 1u);
            if (apply(rows, cols, x) == rhs) {
                best = x;
                break;
            }
        }
        const auto got = Gf2Solver(rows, cols).solve(rhs);
        ASSERT_EQ(got.has_value(), best.has_value());
        if (got)
            EXPECT_EQ(*got, *best) << got->str() << " vs " << best->str();
    }
}
