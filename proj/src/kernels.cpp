// Runtime lane selection. Detection runs once; the chosen lane is fixed for
// the lifetime of the process so a given configuration always reduces in the
// same order.

#include "isogauss/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace isogauss::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
#if defined(__GNUC__) || defined(__clang__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
#else
    return false;
#endif
}

const Ops& select() {
    const char* env = std::getenv("ISOGAUSS_KERNELS");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return scalar();
        if (std::strcmp(env, "avx2") == 0 && avx2() != nullptr && cpu_has_avx2_fma())
            return *avx2();
        if (std::strcmp(env, "neon") == 0 && neon() != nullptr) return *neon();
        return scalar();  // unknown or unsupported request falls back
    }
    if (avx2() != nullptr && cpu_has_avx2_fma()) return *avx2();
    if (neon() != nullptr) return *neon();
    return scalar();
}

}  // namespace

const Ops& active() {
    static const Ops& selected = select();
    return selected;
}

}  // namespace isogauss::kernels
