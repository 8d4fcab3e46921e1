#include "sdc/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sdc::kern {

#if defined(SDC_HAVE_AVX2_TU)
const Ops& avx2_ops();
#endif
#if defined(SDC_HAVE_NEON_TU)
const Ops& neon_ops();
#endif

namespace {

const Ops& pick() {
    const char* env = std::getenv("SDC_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return scalar_ops();
#if defined(SDC_HAVE_AVX2_TU)
    if ((!env || std::strcmp(env, "avx2") == 0) && __builtin_cpu_supports("avx2"))
        return avx2_ops();
#endif
#if defined(SDC_HAVE_NEON_TU)
    if (!env || std::strcmp(env, "neon") == 0) return neon_ops();
#endif
    return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
    static const Ops& selected = pick();
    return selected;
}

}  // namespace sdc::kern
