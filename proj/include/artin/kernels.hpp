#pragma once

// Inner loop of the representation counter: given the admissible values
// p2 (ascending, with their logs) and a weight table indexed by p3 =
// rem - p2 (log p3 for admissible p3, 0 otherwise), accumulate
//
//   weighted = sum_i logp2[i] * weight[rem - p2[i]]
//   count    = #{ i : weight[rem - p2[i]] != 0 }.
//
// A scalar reference kernel and an AVX2 gather/FMA variant are provided;
// the active one is chosen once at runtime. Both produce identical
// counts; weighted sums agree to roundoff (each kernel is deterministic
// for a fixed input, so reports are bit-reproducible per kernel).

#include <cstddef>
#include <cstdint>

namespace artin {

struct PairSum {
    double weighted = 0.0;
    uint64_t count = 0;
};

using PairKernelFn = PairSum (*)(const int32_t* p2, const double* logp2,
                                 size_t m, int32_t rem, const double* weight);

PairSum pair_sum_scalar(const int32_t* p2, const double* logp2, size_t m,
                        int32_t rem, const double* weight);

#if defined(__x86_64__)
PairSum pair_sum_avx2(const int32_t* p2, const double* logp2, size_t m,
                      int32_t rem, const double* weight);
#endif

bool avx2_available();

/// The best kernel for this machine (AVX2 when the CPU has it).
PairKernelFn select_pair_kernel();
const char* selected_pair_kernel_name();

} // namespace artin
