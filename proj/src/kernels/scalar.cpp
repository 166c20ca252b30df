#include "quadric/kernels.hpp"

#include <bit>

namespace quadric::kernels {
namespace {

void exps_add_scalar(std::uint8_t* dst, const std::uint8_t* a, const std::uint8_t* b) {
    for (std::size_t i = 0; i < kExpWidth; ++i)
        dst[i] = static_cast<std::uint8_t>(a[i] + b[i]);
}

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        dst[i] ^= src[i];
}

bool and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    unsigned bits = 0;
    for (std::size_t i = 0; i < words; ++i)
        bits += static_cast<unsigned>(std::popcount(a[i] & b[i]));
    return (bits & 1u) != 0;
}

bool any_set_scalar(const std::uint64_t* a, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] != 0)
            return true;
    return false;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar", exps_add_scalar, xor_words_scalar,
                                   and_parity_scalar, any_set_scalar};
    return table;
}

}  // namespace quadric::kernels
