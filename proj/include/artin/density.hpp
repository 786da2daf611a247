#pragma once

// Density side of the Artin primitive-root machinery: a validated base
// with its fundamental discriminant and power index, the Artin constant
// A_a, the full-density constant L_a, and the conditional density
// delta_a(x mod q) of primes p = x (mod q) with primitive root a.
//
// All congruence densities are computed as exact rationals relative to
// A_a; the transcendental A_a enters only through artin_A / L_const.

#include <cstdint>

#include "artin/arith.hpp"

namespace artin {

/// Validated base: a itself, the discriminant of Q(sqrt(a)), and the
/// largest m with a an m-th power (always odd here since a is not a
/// square).
struct ArtinSpec {
    int64_t a;
    int64_t delta;
    int64_t h;
};

/// Throws invalid_base for a in {-1, 0, 1} and for perfect squares.
ArtinSpec artin_spec(int64_t a);

/// prod_{p|h, p|q} (1 - 1/(p-1))^-1 * prod_{p!|h, p|q} (1 - 1/(p(p-1)))^-1.
Rat f_dagger(const ArtinSpec& spec, int64_t q);

/// prod_{p|q, p|h} (p-2)^-1 * prod_{p|q, p!|h} (p^2-p-1)^-1.
Rat f_ddagger(const ArtinSpec& spec, int64_t q);

/// The twisting discriminant beta_a(q): when delta/gcd(q,|delta|) is odd
/// this is the fundamental discriminant (-1)^((delta/g - 1)/2) * g with
/// g = gcd(q, |delta|); otherwise 1.
int64_t beta_disc(const ArtinSpec& spec, int64_t q);

struct RealWithError {
    double value = 0.0;
    double error_bound = 0.0;
};

/// Truncated Euler product for A_a over p <= pmax, with the tail bound
/// sum_{m > pmax} 1/(m(m-1)) = 1/pmax.
RealWithError artin_A(const ArtinSpec& spec, int64_t pmax);

/// L_a = A_a * (1 + mu(2|delta|) f''(|delta|)); the bracket is exact.
RealWithError L_const(const ArtinSpec& spec, int64_t pmax);

/// The exact bracket L_a / A_a.
Rat L_over_A(const ArtinSpec& spec);

/// A_a(x mod q) / A_a as an exact rational (zero unless
/// gcd(x-1, q, h) = gcd(x, q) = 1, with gcd(0, m) = m).
Rat A_mod_ratio(const ArtinSpec& spec, int64_t x, int64_t q);

/// delta_a(x mod q) / A_a as an exact rational.
Rat delta_ratio(const ArtinSpec& spec, int64_t x, int64_t q);

/// Exact refinement identity: for every m mod Q,
/// delta(m mod Q) = sum of delta(b mod q) over b = m (mod Q). Requires Q | q.
bool delta_refinement_check(const ArtinSpec& spec, int64_t q, int64_t Q);

inline constexpr int64_t kDefaultArtinPmax = 1000000;

} // namespace artin
