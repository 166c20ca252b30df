#pragma once

#include <cstdint>

namespace quadric {

// C(n, k) mod 2 by Lucas: odd iff the bits of k are a subset of the bits of n.
// Negative arguments and k > n give 0.
constexpr int binom_mod2(std::int64_t n, std::int64_t k) noexcept {
    if (n < 0 || k < 0 || k > n)
        return 0;
    return (k & (n - k)) == 0 ? 1 : 0;
}

}  // namespace quadric
