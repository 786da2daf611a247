#include "artin/density.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace artin {

namespace {

// gcd with the convention gcd(0, m) = m, on canonical residues.
int64_t gcd0(int64_t a, int64_t b) {
    return std::gcd(a, b);
}

int64_t mod_pos(int64_t x, int64_t q) {
    int64_t r = x % q;
    return r < 0 ? r + q : r;
}

} // namespace

ArtinSpec artin_spec(int64_t a) {
    if (a == 0 || a == 1 || a == -1)
        throw invalid_base("artin_spec: base must not be -1, 0 or 1");
    uint64_t mag = a > 0 ? static_cast<uint64_t>(a)
                         : static_cast<uint64_t>(-(a + 1)) + 1;
    Factorization f = factorize(mag);
    int64_t g = 0;
    for (auto [p, e] : f.factors) g = std::gcd(g, static_cast<int64_t>(e));
    if (a > 0 && g % 2 == 0)
        throw invalid_base("artin_spec: base must not be a perfect square");
    int64_t h = g;
    while (h % 2 == 0) h /= 2;

    int64_t kernel = squarefree_kernel(a);
    int64_t delta = (mod_pos(kernel, 4) == 1) ? kernel : 4 * kernel;
    return ArtinSpec{a, delta, h};
}

Rat f_dagger(const ArtinSpec& spec, int64_t q) {
    if (q < 1) throw domain_error("f_dagger: q must be positive");
    Rat r(1);
    for (auto [p, e] : factorize(static_cast<uint64_t>(q)).factors) {
        int64_t pp = static_cast<int64_t>(p);
        if (spec.h % pp == 0)
            r *= rat_i64(pp - 1, pp - 2);
        else
            r *= rat_i64(pp * (pp - 1), pp * pp - pp - 1);
    }
    return r;
}

Rat f_ddagger(const ArtinSpec& spec, int64_t q) {
    if (q < 1) throw domain_error("f_ddagger: q must be positive");
    Rat r(1);
    for (auto [p, e] : factorize(static_cast<uint64_t>(q)).factors) {
        int64_t pp = static_cast<int64_t>(p);
        if (spec.h % pp == 0)
            r *= rat_i64(1, pp - 2);
        else
            r *= rat_i64(1, pp * pp - pp - 1);
    }
    return r;
}

int64_t beta_disc(const ArtinSpec& spec, int64_t q) {
    if (q < 1) throw domain_error("beta_disc: q must be positive");
    int64_t g = std::gcd(q, std::abs(spec.delta));
    int64_t quot = spec.delta / g;
    if (quot % 2 == 0) return 1;
    int64_t e = (quot - 1) / 2;
    return (e % 2 == 0) ? g : -g;
}

RealWithError artin_A(const ArtinSpec& spec, int64_t pmax) {
    if (pmax < 100) throw domain_error("artin_A: pmax must be at least 100");
    double v = 1.0;
    for (uint32_t p : primes_up_to(static_cast<uint32_t>(pmax))) {
        double pd = static_cast<double>(p);
        if (spec.h % static_cast<int64_t>(p) == 0)
            v *= 1.0 - 1.0 / (pd - 1.0);
        else
            v *= 1.0 - 1.0 / (pd * (pd - 1.0));
    }
    return RealWithError{v, 1.0 / static_cast<double>(pmax)};
}

Rat L_over_A(const ArtinSpec& spec) {
    int64_t ad = std::abs(spec.delta);
    int mu = moebius(static_cast<uint64_t>(2 * ad));
    if (mu == 0) return Rat(1);
    Rat bracket = Rat(1) + Rat(mu) * f_ddagger(spec, ad);
    return bracket;
}

RealWithError L_const(const ArtinSpec& spec, int64_t pmax) {
    RealWithError a = artin_A(spec, pmax);
    double bracket = to_double(L_over_A(spec));
    return RealWithError{a.value * bracket, a.error_bound * bracket};
}

Rat A_mod_ratio(const ArtinSpec& spec, int64_t x, int64_t q) {
    if (q < 1) throw domain_error("A_mod_ratio: q must be positive");
    int64_t xr = mod_pos(x, q);
    int64_t xm1 = mod_pos(xr - 1, q);
    int64_t g1 = gcd0(gcd0(xm1, q), spec.h);
    if (g1 != 1 || std::gcd(xr, q) != 1) return Rat(0);
    Rat r = f_dagger(spec, q) / Rat(static_cast<long>(euler_phi(q)));
    int64_t gx = gcd0(xm1, q);
    for (auto [p, e] : factorize(static_cast<uint64_t>(gx)).factors) {
        int64_t pp = static_cast<int64_t>(p);
        r *= rat_i64(pp - 1, pp);
    }
    return r;
}

Rat delta_ratio(const ArtinSpec& spec, int64_t x, int64_t q) {
    Rat a = A_mod_ratio(spec, x, q);
    if (a == 0) return a;
    int64_t ad = std::abs(spec.delta);
    int64_t g = std::gcd(q, ad);
    int mu = moebius(static_cast<uint64_t>(2 * (ad / g)));
    if (mu == 0) return a;
    int64_t xr = mod_pos(x, q);
    int kr = kronecker(beta_disc(spec, q), xr);
    Rat bracket = Rat(1) + Rat(mu * kr) * f_ddagger(spec, ad / g);
    return a * bracket;
}

bool delta_refinement_check(const ArtinSpec& spec, int64_t q, int64_t Q) {
    if (Q < 1 || q < 1 || q % Q != 0)
        throw domain_error("delta_refinement_check: requires Q | q");
    for (int64_t m = 0; m < Q; ++m) {
        Rat lhs = delta_ratio(spec, m, Q);
        Rat rhs(0);
        for (int64_t b = m; b < q; b += Q) rhs += delta_ratio(spec, b, q);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace artin
