#include <gtest/gtest.h>

#include <cstdlib>
#include <string_view>

#include "quadric/gf2.hpp"
#include "quadric/kernels.hpp"
#include "support.hpp"

using namespace quadric;
using quadric::testing::Random;

namespace {

std::vector<const kernels::KernelTable*> tables() {
    std::vector<const kernels::KernelTable*> out{&kernels::scalar_table()};
    if (const auto* simd = kernels::simd_table())
        out.push_back(simd);
    return out;
}

}  // namespace

TEST(Kernels, ActiveHonoursEnvironment) {
    const char* env = std::getenv("QUADRIC_KERNELS");
    if (env && std::string_view(env) == "scalar")
        EXPECT_EQ(&kernels::active(), &kernels::scalar_table());
    else if (kernels::simd_table())
        EXPECT_EQ(&kernels::active(), kernels::simd_table());
    else
        EXPECT_EQ(&kernels::active(), &kernels::scalar_table());
}

TEST(Kernels, ExpsAddMatchesBytewiseSum) {
    Random rnd(1);
    for (const auto* t : tables())
        for (int k = 0; k < 500; ++k) {
            std::uint8_t a[kernels::kExpWidth], b[kernels::kExpWidth], d[kernels::kExpWidth];
            for (std::size_t i = 0; i < kernels::kExpWidth; ++i) {
                a[i] = static_cast<std::uint8_t>(rnd.uniform(0, 255));
                b[i] = static_cast<std::uint8_t>(rnd.uniform(0, 255));
            }
            t->exps_add(d, a, b);
            for (std::size_t i = 0; i < kernels::kExpWidth; ++i)
                ASSERT_EQ(d[i], static_cast<std::uint8_t>(a[i] + b[i])) << t->isa;
        }
}

TEST(Kernels, WordKernelsAgreeAcrossVariants) {
    Random rnd(2);
    const auto all = tables();
    for (int k = 0; k < 500; ++k) {
        const std::size_t words = static_cast<std::size_t>(rnd.uniform(0, 19));
        std::vector<std::uint64_t> a(words), b(words);
        for (std::size_t i = 0; i < words; ++i) {
            a[i] = rnd.word() & (rnd.uniform(0, 3) ? ~0ull : 0ull);
            b[i] = rnd.word();
        }
        bool parity = false;
        bool any = false;
        std::vector<std::uint64_t> x = a;
        for (std::size_t i = 0; i < words; ++i) {
            parity ^= __builtin_parityll(a[i] & b[i]);
            any = any || a[i];
            x[i] ^= b[i];
        }
        for (const auto* t : all) {
            EXPECT_EQ(t->and_parity(a.data(), b.data(), words), parity) << t->isa;
            EXPECT_EQ(t->any_set(a.data(), words), any) << t->isa;
            std::vector<std::uint64_t> y = a;
            t->xor_words(y.data(), b.data(), words);
            EXPECT_EQ(y, x) << t->isa;
        }
    }
}
