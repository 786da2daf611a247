#pragma once

// Counting harness: weighted representation counts
// V(n) = sum over p1+p2+p3 = n (ordered, each p_i primitive-root marked
// for its base) of log p1 log p2 log p3, and comparison against the
// predicted C(n) n^2.

#include <cstdint>

#include "artin/sieve.hpp"
#include "artin/singular.hpp"

namespace artin {

struct RepresentationReport {
    int64_t n = 0;
    double weighted_sum = 0.0; // V(n)
    uint64_t raw_count = 0;    // ordered triples
    SingularSeriesEstimate predicted;
    bool ratio_defined = false;
    double ratio = 0.0; // V / (C n^2) when ratio_defined
};

/// Ordered-triple count over the sieve; when exclude_small is set, primes
/// dividing 6 delta_1 delta_2 delta_3 are skipped. Requires the sieve to
/// cover n and to carry marks for all three bases.
RepresentationReport count_representations(const TripleSpec& triple, int64_t n,
                                           const SieveData& data,
                                           bool exclude_small, int threads = 1);

/// count_representations plus the Euler-product prediction and ratio.
RepresentationReport compare(const TripleSpec& triple, int64_t n,
                             const SieveData& data, int64_t pmax,
                             bool exclude_small, int threads = 1);

struct ClassicalReport {
    int64_t n = 0;
    double weighted_sum = 0.0;
    uint64_t raw_count = 0;
    double predicted = 0.0; // 1/2 prod rho_p(n)
    double ratio = 0.0;     // V / (predicted n^2)
};

/// Unrestricted Vinogradov baseline over all primes in the sieve.
ClassicalReport classical_compare(int64_t n, const SieveData& data,
                                  int64_t pmax, int threads = 1);

} // namespace artin
