#include "quadric/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace quadric::kernels {

#if defined(QUADRIC_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(QUADRIC_HAVE_NEON)
const KernelTable& neon_table();
#endif

const KernelTable* simd_table() {
#if defined(QUADRIC_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_table() : nullptr;
#elif defined(QUADRIC_HAVE_NEON)
    return &neon_table();
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        if (const char* env = std::getenv("QUADRIC_KERNELS");
            env != nullptr && std::string_view(env) == "scalar")
            return scalar_table();
        if (const KernelTable* simd = simd_table())
            return *simd;
        return scalar_table();
    }();
    return chosen;
}

}  // namespace quadric::kernels
