#include "quadric/kernels.hpp"

#include <bit>
#include <immintrin.h>

namespace quadric::kernels {
namespace {

void exps_add_avx2(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b) {
    static_assert(kExpWidth == 64);
    const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
    const __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 32));
    const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
    const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), _mm256_add_epi8(a0, b0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 32), _mm256_add_epi8(a1, b1));
}

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < words; ++i)
        dst[i] ^= src[i];
}

// parity(popcount(a & b)) == parity(popcount(xor-fold of (a & b)))
bool and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < words; ++i)
        folded ^= a[i] & b[i];
    return (std::popcount(folded) & 1) != 0;
}

bool any_set_avx2(const std::uint64_t* a, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    if (!_mm256_testz_si256(acc, acc))
        return true;
    for (; i < words; ++i)
        if (a[i] != 0)
            return true;
    return false;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", exps_add_avx2, xor_words_avx2, and_parity_avx2,
                                   any_set_avx2};
    return table;
}

}  // namespace quadric::kernels
