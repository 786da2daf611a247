#pragma once

// Exact integer and rational primitives: 64-bit factorization (trial
// division + deterministic Miller-Rabin + Pollard rho), multiplicative
// functions, and the fully extended Kronecker symbol. Rationals are
// GMP mpq_class, kept canonical (denominator > 0, reduced) by GMP.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace artin {

using Int = mpz_class;
using Rat = mpq_class;

class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_base : public domain_error {
public:
    using domain_error::domain_error;
};
class not_squarefree : public domain_error {
public:
    using domain_error::domain_error;
};
class not_coprime : public domain_error {
public:
    using domain_error::domain_error;
};
class divides_discriminant : public domain_error {
public:
    using domain_error::domain_error;
};
class limit_too_large : public domain_error {
public:
    using domain_error::domain_error;
};
class sieve_too_small : public domain_error {
public:
    using domain_error::domain_error;
};

/// Prime factorization of a positive 64-bit integer, primes strictly
/// increasing, exponents >= 1. The empty list represents 1.
struct Factorization {
    std::vector<std::pair<uint64_t, int>> factors;

    uint64_t value() const;
    bool squarefree() const;
};

Factorization factorize(uint64_t m);

int moebius(uint64_t m);
uint64_t euler_phi(uint64_t m);

/// Deterministic primality for |m| < 2^63; m < 2 is never prime.
bool is_prime(int64_t m);
bool is_prime_u64(uint64_t m);

/// sign(a) * product of primes dividing a to an odd power.
int64_t squarefree_kernel(int64_t a);

/// Fully extended Kronecker symbol (a/n), defined for all integers:
/// (a/0) = 1 iff a = +-1 else 0; (a/-1) = 1 if a >= 0 else -1;
/// (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8;
/// completely multiplicative in n.
int kronecker(int64_t a, int64_t n);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

/// Primes <= limit, ascending.
std::vector<uint32_t> primes_up_to(uint32_t limit);

inline Rat rat(long num, unsigned long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_i64(int64_t num, int64_t den = 1);

double to_double(const Rat& r);

/// "num/den" in lowest terms (denominator printed even when 1).
std::string rat_str(const Rat& r);

} // namespace artin
