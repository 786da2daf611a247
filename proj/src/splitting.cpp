#include "artin/splitting.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <numbers>

namespace artin {

namespace {

int64_t mod_pos(int64_t x, int64_t q) {
    int64_t r = x % q;
    return r < 0 ? r + q : r;
}

void require_squarefree(int64_t k) {
    if (k < 1 || !factorize(static_cast<uint64_t>(k)).squarefree())
        throw not_squarefree("k must be a positive squarefree integer");
}

} // namespace

Complex unit_root(int64_t m, int64_t q) {
    double t = static_cast<double>(mod_pos(m, q)) / static_cast<double>(q);
    return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

int c_indicator(const ArtinSpec& spec, int64_t q, int64_t k, int64_t b) {
    require_squarefree(k);
    if (q < 1) throw domain_error("c_indicator: q must be positive");
    if (std::gcd(b, q) != 1) throw not_coprime("c_indicator: gcd(b, q) must be 1");
    int64_t g = std::gcd(q, k);
    if (mod_pos(b - 1, g) != 0) return 0;
    int64_t ad = std::abs(spec.delta);
    if (k % 2 == 0 && k % ad != 0 && lcm64(q, k) % ad == 0) {
        if (kronecker(beta_disc(spec, q), mod_pos(b, q)) != 1) return 0;
    }
    return 1;
}

int64_t field_degree(const ArtinSpec& spec, int64_t q, int64_t k) {
    require_squarefree(k);
    if (q < 1) throw domain_error("field_degree: q must be positive");
    int64_t kp = k / std::gcd(k, spec.h);
    int64_t l = lcm64(q, k);
    int64_t eps = (k % 2 == 0 && l % std::abs(spec.delta) == 0) ? 2 : 1;
    return kp * static_cast<int64_t>(euler_phi(static_cast<uint64_t>(l))) / eps;
}

Complex exp_sum(const ArtinSpec& spec, int64_t q, int64_t k, int64_t b) {
    require_squarefree(k);
    if (q < 1) throw domain_error("exp_sum: q must be positive");
    if (q == 1) return Complex(static_cast<double>(c_indicator(spec, 1, k, 0)), 0.0);
    b = mod_pos(b, q);
    // Hoisted form of c_indicator: the modulus condition and the Kronecker
    // condition depend on y alone once (q, k) are fixed.
    int64_t g = std::gcd(q, k);
    int64_t ad = std::abs(spec.delta);
    bool need_kron = (k % 2 == 0) && (k % ad != 0) && (lcm64(q, k) % ad == 0);
    int64_t bd = need_kron ? beta_disc(spec, q) : 0;
    Complex s(0.0, 0.0);
    for (int64_t y = 1; y < q; ++y) {
        if ((y - 1) % g != 0) continue;
        if (std::gcd(y, q) != 1) continue;
        if (need_kron && kronecker(bd, y) != 1) continue;
        s += unit_root(b * y, q);
    }
    return s;
}

int64_t ramanujan_sum(int64_t q, int64_t b) {
    int64_t g = std::gcd(mod_pos(b, q), q);
    int64_t qg = q / g;
    int mu = moebius(static_cast<uint64_t>(qg));
    if (mu == 0) return 0;
    int64_t phi_q = static_cast<int64_t>(euler_phi(static_cast<uint64_t>(q)));
    int64_t phi_qg = static_cast<int64_t>(euler_phi(static_cast<uint64_t>(qg)));
    return mu * (phi_q / phi_qg);
}

bool c_factorization_check(const ArtinSpec& spec, int64_t q, int64_t k, int64_t b) {
    require_squarefree(k);
    if (std::gcd(b, q) != 1) throw not_coprime("c_factorization_check");
    int64_t ad = std::abs(spec.delta);
    int64_t d = 1;
    int lhs = c_indicator(spec, q, k, mod_pos(b, q));
    int rhs = 1;
    for (auto [p, e] : factorize(static_cast<uint64_t>(q)).factors) {
        int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= static_cast<int64_t>(p);
        if (ad % static_cast<int64_t>(p) == 0) {
            d *= pe;
        } else {
            rhs &= c_indicator(spec, pe, k, mod_pos(b, pe));
        }
    }
    rhs &= c_indicator(spec, d, k, mod_pos(b, d));
    return lhs == rhs;
}

bool s_multiplicativity_check(const ArtinSpec& spec, int64_t q1, int64_t q2,
                              int64_t k, int64_t b, double tol) {
    if (std::gcd(q1, q2) != 1)
        throw domain_error("s_multiplicativity_check: q1, q2 must be coprime");
    int64_t ad = std::abs(spec.delta);
    if (std::gcd(q1, ad) != 1 && std::gcd(q2, ad) != 1)
        throw domain_error("s_multiplicativity_check: one factor must be prime to delta");
    // b = b1 q2 + b2 q1 mod q1 q2.
    int64_t q2inv = static_cast<int64_t>(
        powmod(static_cast<uint64_t>(mod_pos(q2, q1)),
               euler_phi(static_cast<uint64_t>(q1)) - 1, static_cast<uint64_t>(q1)));
    int64_t q1inv = static_cast<int64_t>(
        powmod(static_cast<uint64_t>(mod_pos(q1, q2)),
               euler_phi(static_cast<uint64_t>(q2)) - 1, static_cast<uint64_t>(q2)));
    if (q1 == 1) q2inv = 0;
    if (q2 == 1) q1inv = 0;
    int64_t b1 = mod_pos(b * q2inv, q1);
    int64_t b2 = mod_pos(b * q1inv, q2);
    Complex lhs = exp_sum(spec, q1 * q2, k, mod_pos(b, q1 * q2));
    Complex rhs = exp_sum(spec, q1, k, b1) * exp_sum(spec, q2, k, b2);
    return std::abs(lhs.real() - rhs.real()) <= tol &&
           std::abs(lhs.imag() - rhs.imag()) <= tol;
}

MoreeGap moree_identity_check(const ArtinSpec& spec, int64_t q, int64_t b,
                              int64_t kmax) {
    if (std::gcd(b, q) != 1) throw not_coprime("moree_identity_check");
    double partial = 0.0;
    for (int64_t k = 1; k <= kmax; ++k) {
        int mu = moebius(static_cast<uint64_t>(k));
        if (mu == 0) continue;
        if (c_indicator(spec, q, k, mod_pos(b, q)) == 0) continue;
        partial += static_cast<double>(mu) / static_cast<double>(field_degree(spec, q, k));
    }
    double target = to_double(delta_ratio(spec, b, q)) *
                    artin_A(spec, kDefaultArtinPmax).value;
    return MoreeGap{partial, target, std::abs(partial - target)};
}

} // namespace artin
