#include "artin/kernels.hpp"

namespace artin {

bool avx2_available() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

PairKernelFn select_pair_kernel() {
#if defined(__x86_64__)
    if (avx2_available()) return pair_sum_avx2;
#endif
    return pair_sum_scalar;
}

const char* selected_pair_kernel_name() {
#if defined(__x86_64__)
    if (avx2_available()) return "avx2";
#endif
    return "scalar";
}

} // namespace artin
