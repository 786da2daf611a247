// Built with -mavx2 -mfma; only ever called after the dispatcher has
// checked CPU support.

#include "artin/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace artin {

PairSum pair_sum_avx2(const int32_t* p2, const double* logp2, size_t m,
                      int32_t rem, const double* weight) {
    __m256d acc = _mm256_setzero_pd();
    const __m256d zero = _mm256_setzero_pd();
    const __m128i vrem = _mm_set1_epi32(rem);
    uint64_t count = 0;
    size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m128i vp = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p2 + i));
        __m128i idx = _mm_sub_epi32(vrem, vp);
        __m256d w = _mm256_i32gather_pd(weight, idx, 8);
        __m256d lp = _mm256_loadu_pd(logp2 + i);
        acc = _mm256_fmadd_pd(lp, w, acc);
        __m256d nz = _mm256_cmp_pd(w, zero, _CMP_NEQ_OQ);
        count += static_cast<uint64_t>(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(nz))));
    }
    // Fixed lane-reduction order keeps the sum bit-reproducible.
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double weighted = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
    for (; i < m; ++i) {
        double w = weight[rem - p2[i]];
        if (w != 0.0) {
            weighted += logp2[i] * w;
            ++count;
        }
    }
    return PairSum{weighted, count};
}

} // namespace artin

#endif
