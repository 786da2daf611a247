#pragma once

// The Artin factor C_a(n) for n = p1 + p2 + p3 with prescribed primitive
// roots, by two independent routes:
//
//  * the Euler-product route: C = 1/2 * prod L_i * sigma(D) * prod_{p!|D} sigma(p),
//    with sigma(p) in closed form away from the discriminants and by
//    exact brute force at the remaining moduli;
//  * the Moebius/exponential-sum route: the truncated triple sum over
//    squarefree (k1,k2,k3) of mu mu mu times the singular series built
//    from S_{a,q,k}.
//
// Local densities sigma_{a,n}(d) are exact rationals throughout; the
// transcendental Artin constants enter only in final numeric values.

#include <array>
#include <cstdint>
#include <vector>

#include "artin/density.hpp"

namespace artin {

struct TripleSpec {
    std::array<ArtinSpec, 3> specs;
    int64_t modulus; // the combined discriminant modulus D
};

/// D = 2^(min nu2(delta_i) - max nu2(delta_i)) * lcm(|delta_1|,|delta_2|,|delta_3|).
int64_t combined_modulus(const std::array<ArtinSpec, 3>& specs);

TripleSpec make_triple(int64_t a1, int64_t a2, int64_t a3);

/// sigma_{a,n}(d) = d * sum over b1+b2+b3 = n (mod d) of
/// prod delta_{a_i}(b_i mod d)/L_{a_i}, exact.
Rat sigma_d(const TripleSpec& triple, int64_t n, int64_t d);

/// Closed form of sigma_{a,n}(p) for p not dividing any discriminant.
Rat sigma_p_closed(const TripleSpec& triple, int64_t n, int64_t p);

/// M_a(c,p) = constant_term + exp_coeff * e_p(c), for p coprime to c and
/// to delta: constant_term = -1/(p-1-theta), exp_coeff = -theta/(p-1-theta).
struct MPair {
    Rat constant_term;
    Rat exp_coeff;
};
MPair m_closed(const ArtinSpec& spec, int64_t c, int64_t p);

/// theta_{a_i}(p) = 1 if p | h_i else 1/p, plus the elementary symmetric
/// functions Xi_j(p) of the three values.
struct ThetaVector {
    std::array<Rat, 3> theta;
    Rat xi(int j) const;
};
ThetaVector theta_vector(const TripleSpec& triple, int64_t p);

/// Classical Vinogradov local density rho_p(n), by direct count over
/// unit triples.
Rat classical_rho(int64_t n, int64_t p);

/// The classical ternary singular series 1/2 prod_{p <= pmax} rho_p(n),
/// via the closed form of rho_p.
double classical_constant(int64_t n, int64_t pmax);

struct Truncation {
    int64_t pmax = 0;
    int64_t kmax = 0;
    int64_t qmax = 0;
};

struct SingularSeriesEstimate {
    double value = 0.0;
    Rat rational_part;               // sigma factors and L/A brackets, exact
    RealWithError transcendental_part; // prod A_{a_i}
    Truncation truncation;
    double tail_estimate = 0.0;
};

/// Euler-product route, truncated at pmax. Exact except for prod A_{a_i}
/// and the omitted factors at p > pmax (bounded by tail_estimate on the
/// log scale).
SingularSeriesEstimate euler_constant(const TripleSpec& triple, int64_t n,
                                      int64_t pmax, int threads = 1);

/// Triple Moebius sum route, truncated at kmax (per k_i) and qmax.
SingularSeriesEstimate ksum_constant(const TripleSpec& triple, int64_t n,
                                     int64_t kmax, int64_t qmax);

struct PositivityResult {
    bool positive = false;
    int64_t vanishing_modulus = 0;          // set when positive == false
    std::array<int64_t, 3> witness{0, 0, 0}; // residues mod witness_modulus
    int64_t witness_modulus = 0;             // set when positive == true
};

/// Exact positivity of C_a(n) via the finitely many local conditions.
PositivityResult positivity(const TripleSpec& triple, int64_t n);

/// Residues n mod lcm(6, |delta_a|) with C_{(a,a,a)}(n) > 0.
std::vector<int64_t> congruence_table(int64_t a);

/// Diagnostic lower-bound scale prod phi(h_i) / (delta_i^2 h_i); no
/// inequality is asserted against it.
Rat positivity_floor_diagnostic(const TripleSpec& triple);

/// The base a = (-15)^5 shows that L^3 sigma(|delta|) admits no
/// per-prime factorization: delta-positivity holds mod 3 and mod 5 for
/// classes summing to n, yet sigma(15) vanishes at n = 7 (mod 15).
struct NonfactorizationReport {
    std::vector<int64_t> support_mod15;
    std::vector<int64_t> support_mod3;
    std::vector<int64_t> support_mod5;
    bool sigma15_zero_at_7 = false;
    std::array<int64_t, 3> witness_mod3{0, 0, 0};
    std::array<int64_t, 3> witness_mod5{0, 0, 0};
    bool witnesses_positive = false;
    bool all_ok = false;
};
NonfactorizationReport nonfactorization_witness();

/// delta-support of a base modulo d: residues with delta_a(x mod d) > 0.
std::vector<int64_t> delta_support(const ArtinSpec& spec, int64_t d);

} // namespace artin
