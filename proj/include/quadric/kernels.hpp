#pragma once

// Data-parallel inner loops used by the polynomial and GF(2) layers.
//
// Each kernel has a portable scalar reference implementation and, where the
// target supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant
// is chosen once at runtime from the CPU feature bits; setting the environment
// variable QUADRIC_KERNELS=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace quadric::kernels {

// Exponent vectors are fixed-width byte arrays of this length.
inline constexpr std::size_t kExpWidth = 64;

struct KernelTable {
    std::string_view isa;
    // dst[i] = a[i] + b[i] for i < kExpWidth (wrapping byte add; callers keep
    // exponents below 256 through the degree cap).
    void (*exps_add)(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b);
    // dst[i] ^= src[i] for i < words.
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // Parity of popcount(a & b) over `words` words: the GF(2) dot product.
    bool (*and_parity)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // True if any word is nonzero.
    bool (*any_set)(const std::uint64_t* a, std::size_t words);
};

const KernelTable& scalar_table();

// nullptr when the running CPU (or the build) lacks the instruction set.
const KernelTable* simd_table();

// The table selected for this process.
const KernelTable& active();

}  // namespace quadric::kernels
