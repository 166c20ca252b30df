#include "quadric/kernels.hpp"

#include <arm_neon.h>
#include <bit>

namespace quadric::kernels {
namespace {

void exps_add_neon(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b) {
    for (std::size_t i = 0; i < kExpWidth; i += 16)
        vst1q_u8(dst + i, vaddq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
}

void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2)
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i)
        dst[i] ^= src[i];
}

bool and_parity_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2)
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    std::uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < words; ++i)
        folded ^= a[i] & b[i];
    return (std::popcount(folded) & 1) != 0;
}

bool any_set_neon(const std::uint64_t* a, std::size_t words) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2)
        acc = vorrq_u64(acc, vld1q_u64(a + i));
    if ((vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1)) != 0)
        return true;
    for (; i < words; ++i)
        if (a[i] != 0)
            return true;
    return false;
}

}  // namespace

const KernelTable& neon_table() {
    static const KernelTable table{"neon", exps_add_neon, xor_words_neon, and_parity_neon,
                                   any_set_neon};
    return table;
}

}  // namespace quadric::kernels
