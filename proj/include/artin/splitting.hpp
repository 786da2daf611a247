#pragma once

// Splitting/cyclotomic side: the automorphism indicator c_{a,q,k}(b),
// the degree of Q(zeta_q, zeta_k, a^{1/k}), the exponential sums
// S_{a,q,k}(b) over (Z/q)^*, and the truncated Moebius-sum identity that
// recovers delta_a(b mod q) from them.

#include <complex>
#include <cstdint>

#include "artin/density.hpp"

namespace artin {

using Complex = std::complex<double>;

/// 1 iff the cyclotomic automorphism zeta_q -> zeta_q^b restricts to the
/// identity on Q(zeta_q) n Q(zeta_k, a^{1/k}). Requires squarefree k and
/// gcd(b, q) = 1.
int c_indicator(const ArtinSpec& spec, int64_t q, int64_t k, int64_t b);

/// [Q(zeta_q, zeta_k, a^{1/k}) : Q] = k' phi(lcm(q,k)) / eps with
/// k' = k/gcd(k,h) and eps = 2 iff 2 | k and delta | lcm(q,k).
int64_t field_degree(const ArtinSpec& spec, int64_t q, int64_t k);

/// S_{a,q,k}(b) = sum over y in (Z/q)^* of c(y) e(by/q), by direct summation.
Complex exp_sum(const ArtinSpec& spec, int64_t q, int64_t k, int64_t b);

/// Ramanujan sum c_q(b) closed form (the k = 1 specialization oracle).
int64_t ramanujan_sum(int64_t q, int64_t b);

/// c(q) = c(d) * prod c(p_i^e_i) where d is the part of q composed of
/// primes dividing delta.
bool c_factorization_check(const ArtinSpec& spec, int64_t q, int64_t k, int64_t b);

/// S(q1 q2, b) = S(q1, b1) S(q2, b2) for coprime q1, q2 with at least one
/// coprime to delta; b1, b2 are the CRT components of b.
bool s_multiplicativity_check(const ArtinSpec& spec, int64_t q1, int64_t q2,
                              int64_t k, int64_t b, double tol = 1e-9);

struct MoreeGap {
    double partial;
    double target;
    double gap;
};

/// Truncated sum over squarefree k <= kmax of mu(k) c(b) / degree,
/// against the closed-form density target delta_a(b mod q).
MoreeGap moree_identity_check(const ArtinSpec& spec, int64_t q, int64_t b,
                              int64_t kmax);

/// e(m/q) with the argument reduced exactly before the trig call.
Complex unit_root(int64_t m, int64_t q);

} // namespace artin
