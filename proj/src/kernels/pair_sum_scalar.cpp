#include "artin/kernels.hpp"

namespace artin {

PairSum pair_sum_scalar(const int32_t* p2, const double* logp2, size_t m,
                        int32_t rem, const double* weight) {
    PairSum acc;
    for (size_t i = 0; i < m; ++i) {
        double w = weight[rem - p2[i]];
        if (w != 0.0) {
            acc.weighted += logp2[i] * w;
            ++acc.count;
        }
    }
    return acc;
}

} // namespace artin
