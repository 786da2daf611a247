#include <doctest.h>

#include "artin/splitting.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace artin;

namespace {

const double kTol = 1e-9;

bool close(Complex a, Complex b, double tol = kTol) {
    return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

std::vector<int64_t> squarefree_up_to(int64_t kmax) {
    std::vector<int64_t> ks;
    for (int64_t k = 1; k <= kmax; ++k)
        if (moebius(static_cast<uint64_t>(k)) != 0) ks.push_back(k);
    return ks;
}

} // namespace

TEST_CASE("c_indicator") {
    ArtinSpec s2 = artin_spec(2);
    for (int64_t b : {1, 3, 7, 9})
        CHECK(c_indicator(s2, 10, 1, b) == 1); // k = 1: conditions vacuous
    CHECK(c_indicator(s2, 8, 2, 7) == 1);
    CHECK(c_indicator(s2, 8, 2, 3) == 0);
    CHECK(c_indicator(s2, 8, 2, 1) == 1);  // 1 = 1 mod 8 is a square residue
    CHECK(c_indicator(s2, 9, 6, 5) == 0);  // b != 1 mod gcd(9,6)
    CHECK_THROWS_AS(c_indicator(s2, 8, 4, 1), not_squarefree);
    CHECK_THROWS_AS(c_indicator(s2, 8, 2, 4), not_coprime);
}

TEST_CASE("field_degree") {
    ArtinSpec s2 = artin_spec(2), s27 = artin_spec(27);
    CHECK(field_degree(s2, 1, 1) == 1);
    CHECK(field_degree(s2, 8, 2) == 4);
    CHECK(field_degree(s27, 1, 3) == 2);
    CHECK_THROWS_AS(field_degree(s2, 8, 12), not_squarefree);
    for (int64_t q : {1, 2, 3, 5, 8, 12, 24})
        for (int64_t k : squarefree_up_to(15))
            CHECK(field_degree(s27, q, k) >= 1);
}

TEST_CASE("exp_sum at k=1 is the Ramanujan sum") {
    ArtinSpec s5 = artin_spec(5);
    for (int64_t q = 1; q <= 60; ++q)
        for (int64_t b = 0; b < q || (q == 1 && b == 0); ++b) {
            Complex s = exp_sum(s5, q, 1, b);
            CHECK(close(s, Complex(static_cast<double>(ramanujan_sum(q, b)), 0.0)));
            if (q == 1) break;
        }
}

TEST_CASE("prime-power moduli away from b and delta") {
    // |S(p, k, b)| = 1 and S(p^j, k, b) = 0 for j > 1, whenever p !| b delta.
    std::vector<int64_t> bases = {2, 5, 27, -3375};
    for (int64_t a : bases) {
        ArtinSpec s = artin_spec(a);
        for (uint32_t p : primes_up_to(50)) {
            if (std::abs(s.delta) % p == 0) continue;
            for (int64_t k : squarefree_up_to(30)) {
                for (int64_t b : {1, 2, 3, 5, 11}) {
                    if (b % p == 0) continue;
                    CHECK(std::abs(std::abs(exp_sum(s, p, k, b)) - 1.0) <= kTol);
                }
                if (p <= 13) {
                    int64_t p2 = static_cast<int64_t>(p) * p;
                    int64_t p3 = p2 * static_cast<int64_t>(p);
                    for (int64_t b : {1, 3, 5}) {
                        if (b % p == 0) continue;
                        CHECK(std::abs(exp_sum(s, p2, k, b)) <= kTol);
                        if (p <= 7) CHECK(std::abs(exp_sum(s, p3, k, b)) <= kTol);
                    }
                }
            }
        }
    }
}

TEST_CASE("discriminant-composed moduli vanish beyond delta") {
    for (int64_t a : {2, 27, 5, -759375}) {
        ArtinSpec s = artin_spec(a);
        int64_t ad = std::abs(s.delta);
        for (int64_t q = 2; q <= 4 * ad; ++q) {
            // q composed of primes dividing delta, q !| delta
            int64_t rest = q;
            for (auto [p, e] : factorize(static_cast<uint64_t>(ad)).factors)
                while (rest % static_cast<int64_t>(p) == 0) rest /= static_cast<int64_t>(p);
            if (rest != 1 || ad % q == 0) continue;
            for (int64_t k : squarefree_up_to(15)) {
                for (int64_t b : {1, 5, 7, 11, 13}) {
                    if (std::gcd(b, q) != 1) continue;
                    CHECK(std::abs(exp_sum(s, q, k, b)) <= kTol);
                }
            }
        }
    }
}

TEST_CASE("periodic sums against a full-period character vanish") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        int64_t r = 1 + static_cast<int64_t>(rng() % 6);
        int64_t mult = 2 + static_cast<int64_t>(rng() % 5);
        int64_t Q = r * mult;
        std::vector<Complex> f(r);
        for (auto& v : f) v = Complex(unif(rng), unif(rng));
        int64_t c = 1;
        while (std::gcd(c, Q) != 1) ++c;
        Complex sum(0.0, 0.0);
        for (int64_t b = 0; b < Q; ++b) sum += unit_root(b * c, Q) * f[b % r];
        CHECK(std::abs(sum) <= 1e-9);
    }
}

TEST_CASE("indicator factors over coprime moduli") {
    ArtinSpec s2 = artin_spec(2), s27 = artin_spec(27);
    for (int64_t b = 1; b < 24; ++b) {
        if (std::gcd(b, static_cast<int64_t>(24)) != 1) continue;
        CHECK(c_factorization_check(s2, 24, 2, b));
    }
    for (int64_t b = 1; b < 60; ++b) {
        if (std::gcd(b, static_cast<int64_t>(60)) != 1) continue;
        CHECK(c_factorization_check(s27, 60, 6, b));
    }
    CHECK(c_factorization_check(s2, 9, 3, 2)); // single prime-power factor
}

TEST_CASE("exponential sums multiply over coprime moduli") {
    ArtinSpec s2 = artin_spec(2), s5 = artin_spec(5);
    for (int64_t b : {1, 5, 7, 11, 13, 17, 19, 23})
        CHECK(s_multiplicativity_check(s2, 3, 8, 2, b));
    for (int64_t b : {1, 3, 7, 9, 11, 13, 17, 19})
        CHECK(s_multiplicativity_check(s5, 4, 5, 10, b));
    CHECK(s_multiplicativity_check(s2, 12, 1, 2, 5)); // q2 = 1
    CHECK(s_multiplicativity_check(s5, 7, 9, 6, 4));
}

TEST_CASE("uniform |S| diagnostic") {
    // No bound is asserted; the observed maximum is recorded for the log.
    double maxs = 0.0;
    for (int64_t a : {2, 27, -759375}) {
        ArtinSpec s = artin_spec(a);
        for (int64_t q = 2; q <= 48; ++q)
            for (int64_t k : squarefree_up_to(10))
                for (int64_t b = 1; b < q; ++b) {
                    if (std::gcd(b, q) != 1) continue;
                    maxs = std::max(maxs, std::abs(exp_sum(s, q, k, b)));
                }
    }
    MESSAGE("max |S_{a,q,k}(b)| over the sampled grid: ", maxs);
    CHECK(maxs > 0.0);
}

TEST_CASE("truncated Moebius sum approaches the closed-form density") {
    ArtinSpec s2 = artin_spec(2);
    MoreeGap full = moree_identity_check(s2, 1, 1, 10000);
    CHECK(full.gap <= 0.01); // q = 1 target is the full Artin density L_2

    ArtinSpec s27 = artin_spec(27);
    MoreeGap zero = moree_identity_check(s27, 12, 7, 1000);
    CHECK(zero.target == 0.0);
    CHECK(std::abs(zero.partial) <= 0.02);

    MoreeGap five = moree_identity_check(s27, 12, 5, 1000);
    CHECK(five.gap <= 0.02);

    MoreeGap coarse = moree_identity_check(s27, 12, 5, 1000);
    MoreeGap finer = moree_identity_check(s27, 12, 5, 4000);
    CHECK(finer.gap <= coarse.gap + 2.0 / 1000.0);
}
