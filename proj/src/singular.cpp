#include "artin/singular.hpp"

#include "artin/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace artin {

namespace {

int64_t mod_pos(int64_t x, int64_t q) {
    int64_t r = x % q;
    return r < 0 ? r + q : r;
}

int nu2(int64_t v) {
    int n = 0;
    v = std::abs(v);
    while (v % 2 == 0) {
        v /= 2;
        ++n;
    }
    return n;
}

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int int_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    Int r(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(u);
    return neg ? Int(-r) : r;
}

Rat rat_i128(__int128 num, __int128 den) {
    Rat r;
    r.get_num() = int_from_i128(num);
    r.get_den() = int_from_i128(den);
    r.canonicalize();
    return r;
}

// sigma(p) away from the discriminants, as a reduced fraction:
//   [prod(p^2-p-t_i) - sum_{j=n mod p} e_j(t) p^(4-j) + prod(p+t_i)]
//   / prod(p^2-p-t_i),
// where t_i = p if p | h_i else 1. The int128 path requires p^6 < 2^126.
constexpr int64_t kSigmaI128Limit = int64_t(1) << 20;

void sigma_p_closed_i128(const TripleSpec& triple, int64_t n, int64_t p,
                         __int128& num, __int128& den) {
    __int128 t[3];
    for (int i = 0; i < 3; ++i)
        t[i] = (triple.specs[i].h % p == 0) ? p : 1;
    __int128 pp = static_cast<__int128>(p) * p;
    __int128 d = 1, plus = 1;
    for (int i = 0; i < 3; ++i) {
        d *= pp - p - t[i];
        plus *= p + t[i];
    }
    __int128 e[4];
    e[0] = 1;
    e[1] = t[0] + t[1] + t[2];
    e[2] = t[0] * t[1] + t[1] * t[2] + t[0] * t[2];
    e[3] = t[0] * t[1] * t[2];
    __int128 mid = 0;
    int64_t nr = mod_pos(n, p);
    for (int j = 0; j <= 3; ++j) {
        if (mod_pos(j, p) != nr) continue;
        __int128 pw = 1;
        for (int i = 0; i < 4 - j; ++i) pw *= p;
        mid += e[j] * pw;
    }
    num = d - mid + plus;
    den = d;
    if (num != 0) {
        unsigned __int128 g = gcd_u128(
            num < 0 ? -static_cast<unsigned __int128>(num)
                    : static_cast<unsigned __int128>(num),
            static_cast<unsigned __int128>(den));
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    } else {
        den = 1;
    }
}

Rat sigma_p_closed_rat(const TripleSpec& triple, int64_t n, int64_t p) {
    if (p <= kSigmaI128Limit) {
        __int128 num, den;
        sigma_p_closed_i128(triple, n, p, num, den);
        return rat_i128(num, den);
    }
    Int pz(static_cast<long>(p));
    Int t[3];
    for (int i = 0; i < 3; ++i)
        t[i] = (triple.specs[i].h % p == 0) ? pz : Int(1);
    Int pp = pz * pz;
    Int d(1), plus(1);
    for (int i = 0; i < 3; ++i) {
        d *= pp - pz - t[i];
        plus *= pz + t[i];
    }
    Int e[4] = {Int(1), t[0] + t[1] + t[2],
                t[0] * t[1] + t[1] * t[2] + t[0] * t[2], t[0] * t[1] * t[2]};
    Int mid(0);
    int64_t nr = mod_pos(n, p);
    for (int j = 0; j <= 3; ++j) {
        if (mod_pos(j, p) != nr) continue;
        Int pw(1);
        for (int i = 0; i < 4 - j; ++i) pw *= pz;
        mid += e[j] * pw;
    }
    Rat r;
    r.get_num() = d - mid + plus;
    r.get_den() = d;
    r.canonicalize();
    return r;
}

} // namespace

int64_t combined_modulus(const std::array<ArtinSpec, 3>& specs) {
    int mn = 64, mx = 0;
    int64_t l = 1;
    for (const auto& s : specs) {
        mn = std::min(mn, nu2(s.delta));
        mx = std::max(mx, nu2(s.delta));
        l = lcm64(l, std::abs(s.delta));
    }
    for (int i = 0; i < mx - mn; ++i) l /= 2;
    return l;
}

TripleSpec make_triple(int64_t a1, int64_t a2, int64_t a3) {
    std::array<ArtinSpec, 3> specs{artin_spec(a1), artin_spec(a2), artin_spec(a3)};
    return TripleSpec{specs, combined_modulus(specs)};
}

std::vector<int64_t> delta_support(const ArtinSpec& spec, int64_t d) {
    std::vector<int64_t> s;
    for (int64_t x = 0; x < d; ++x)
        if (delta_ratio(spec, x, d) > 0) s.push_back(x);
    return s;
}

Rat sigma_d(const TripleSpec& triple, int64_t n, int64_t d) {
    if (d < 1) throw domain_error("sigma_d: d must be positive");
    std::array<std::vector<Rat>, 3> w;
    for (int i = 0; i < 3; ++i) {
        Rat bracket = L_over_A(triple.specs[i]);
        w[i].resize(d);
        for (int64_t b = 0; b < d; ++b)
            w[i][b] = delta_ratio(triple.specs[i], b, d) / bracket;
    }
    Rat sum(0);
    int64_t nr = mod_pos(n, d);
    for (int64_t b1 = 0; b1 < d; ++b1) {
        if (w[0][b1] == 0) continue;
        for (int64_t b2 = 0; b2 < d; ++b2) {
            if (w[1][b2] == 0) continue;
            int64_t b3 = mod_pos(nr - b1 - b2, d);
            if (w[2][b3] == 0) continue;
            sum += w[0][b1] * w[1][b2] * w[2][b3];
        }
    }
    return Rat(static_cast<long>(d)) * sum;
}

Rat sigma_p_closed(const TripleSpec& triple, int64_t n, int64_t p) {
    if (!is_prime(p)) throw domain_error("sigma_p_closed: p must be prime");
    for (const auto& s : triple.specs)
        if (s.delta % p == 0)
            throw divides_discriminant("sigma_p_closed: p divides a discriminant");
    return sigma_p_closed_rat(triple, n, p);
}

ThetaVector theta_vector(const TripleSpec& triple, int64_t p) {
    ThetaVector tv;
    for (int i = 0; i < 3; ++i)
        tv.theta[i] = (triple.specs[i].h % p == 0) ? Rat(1) : rat_i64(1, p);
    return tv;
}

Rat ThetaVector::xi(int j) const {
    switch (j) {
    case 0: return Rat(1);
    case 1: return theta[0] + theta[1] + theta[2];
    case 2: return theta[0] * theta[1] + theta[1] * theta[2] + theta[0] * theta[2];
    case 3: return theta[0] * theta[1] * theta[2];
    default: throw domain_error("xi: j must be in 0..3");
    }
}

MPair m_closed(const ArtinSpec& spec, int64_t c, int64_t p) {
    if (!is_prime(p)) throw domain_error("m_closed: p must be prime");
    if (c % p == 0) throw domain_error("m_closed: requires p coprime to c");
    if (spec.delta % p == 0)
        throw divides_discriminant("m_closed: p divides the discriminant");
    int64_t t = (spec.h % p == 0) ? p : 1;
    int64_t den = p * p - p - t;
    return MPair{rat_i64(-p, den), rat_i64(-t, den)};
}

Rat classical_rho(int64_t n, int64_t p) {
    if (!is_prime(p)) throw domain_error("classical_rho: p must be prime");
    int64_t nr = mod_pos(n, p);
    int64_t count = 0;
    for (int64_t b1 = 1; b1 < p; ++b1)
        for (int64_t b2 = 1; b2 < p; ++b2) {
            int64_t b3 = mod_pos(nr - b1 - b2, p);
            if (b3 != 0) ++count;
        }
    Rat den = rat_i64(p - 1) * rat_i64(p - 1) * rat_i64(p - 1);
    return Rat(static_cast<long>(p)) * rat_i64(count) / den;
}

double classical_constant(int64_t n, int64_t pmax) {
    double prod = 1.0;
    for (uint32_t p : primes_up_to(static_cast<uint32_t>(pmax))) {
        double pm1 = static_cast<double>(p) - 1.0;
        if (n % static_cast<int64_t>(p) == 0)
            prod *= 1.0 - 1.0 / (pm1 * pm1);
        else
            prod *= 1.0 + 1.0 / (pm1 * pm1 * pm1);
    }
    return 0.5 * prod;
}

namespace {

RealWithError transcendental_product(const TripleSpec& triple) {
    double value = 1.0, lo = 1.0, hi = 1.0;
    for (const auto& s : triple.specs) {
        RealWithError a = artin_A(s, kDefaultArtinPmax);
        value *= a.value;
        lo *= std::max(0.0, a.value - a.error_bound);
        hi *= a.value + a.error_bound;
    }
    return RealWithError{value, std::max(hi - value, value - lo)};
}

} // namespace

SingularSeriesEstimate euler_constant(const TripleSpec& triple, int64_t n,
                                      int64_t pmax, int threads) {
    if (pmax < 100) throw domain_error("euler_constant: pmax must be at least 100");
    int64_t D = triple.modulus;
    int64_t ddd = 1;
    for (const auto& s : triple.specs) ddd = lcm64(ddd, s.delta);

    Rat prefix(1);
    for (const auto& s : triple.specs) prefix *= L_over_A(s);
    prefix *= sigma_d(triple, n, D);

    std::vector<uint32_t> generic;
    for (uint32_t p : primes_up_to(static_cast<uint32_t>(pmax))) {
        if (D % static_cast<int64_t>(p) == 0) continue;
        if (ddd % static_cast<int64_t>(p) == 0)
            prefix *= sigma_d(triple, n, static_cast<int64_t>(p));
        else
            generic.push_back(p);
    }

    // Partial products per fixed-size chunk; combined in chunk order so the
    // result is independent of the thread count.
    const size_t chunk = 2048;
    size_t nchunks = (generic.size() + chunk - 1) / chunk;
    std::vector<Int> nums(nchunks, Int(1)), dens(nchunks, Int(1));
    auto work = [&](size_t ci) {
        Int np(1), dp(1);
        size_t lo = ci * chunk, hi = std::min(generic.size(), lo + chunk);
        for (size_t i = lo; i < hi; ++i) {
            if (generic[i] <= kSigmaI128Limit) {
                __int128 fn, fd;
                sigma_p_closed_i128(triple, n, generic[i], fn, fd);
                np *= int_from_i128(fn);
                dp *= int_from_i128(fd);
            } else {
                Rat f = sigma_p_closed_rat(triple, n, generic[i]);
                np *= f.get_num();
                dp *= f.get_den();
            }
        }
        nums[ci] = np;
        dens[ci] = dp;
    };
    int T = std::max(1, threads);
    if (T <= 1 || nchunks <= 1) {
        for (size_t ci = 0; ci < nchunks; ++ci) work(ci);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < T; ++t)
            pool.emplace_back([&] {
                for (size_t ci = next.fetch_add(1); ci < nchunks;
                     ci = next.fetch_add(1))
                    work(ci);
            });
        for (auto& th : pool) th.join();
    }
    Int num(1), den(1);
    for (size_t ci = 0; ci < nchunks; ++ci) {
        num *= nums[ci];
        den *= dens[ci];
    }
    Rat generic_part;
    generic_part.get_num() = num;
    generic_part.get_den() = den;
    generic_part.canonicalize();

    SingularSeriesEstimate est;
    est.rational_part = prefix * generic_part;
    est.transcendental_part = transcendental_product(triple);
    est.truncation = Truncation{pmax, 0, 0};
    double pm = static_cast<double>(pmax) - 2.0;
    est.tail_estimate = 11.0 * (1.0 / pm + 1.0 / (pm * pm));
    est.value = 0.5 * to_double(est.rational_part) * est.transcendental_part.value;
    return est;
}

SingularSeriesEstimate ksum_constant(const TripleSpec& triple, int64_t n,
                                     int64_t kmax, int64_t qmax) {
    if (kmax < 1 || qmax < 1)
        throw domain_error("ksum_constant: kmax and qmax must be positive");
    std::vector<int64_t> ks;
    for (int64_t k = 1; k <= kmax; ++k)
        if (moebius(static_cast<uint64_t>(k)) != 0) ks.push_back(k);

    // The three k-sums factor per (q, z); deduplicate equal bases.
    std::array<int, 3> slot{};
    std::vector<const ArtinSpec*> uniq;
    for (int i = 0; i < 3; ++i) {
        int found = -1;
        for (size_t u = 0; u < uniq.size(); ++u)
            if (uniq[u]->a == triple.specs[i].a) found = static_cast<int>(u);
        if (found < 0) {
            uniq.push_back(&triple.specs[i]);
            found = static_cast<int>(uniq.size()) - 1;
        }
        slot[i] = found;
    }

    double total = 0.0;
    for (int64_t q = 1; q <= qmax; ++q) {
        std::vector<Complex> roots(q);
        for (int64_t m = 0; m < q; ++m) roots[m] = unit_root(m, q);
        std::vector<int64_t> units;
        if (q == 1)
            units.push_back(0);
        else
            for (int64_t z = 1; z < q; ++z)
                if (std::gcd(z, q) == 1) units.push_back(z);

        std::vector<std::vector<Complex>> U(uniq.size(),
                                            std::vector<Complex>(units.size()));
        for (size_t u = 0; u < uniq.size(); ++u) {
            const ArtinSpec& sp = *uniq[u];
            int64_t ad = std::abs(sp.delta);
            for (int64_t k : ks) {
                int64_t g = std::gcd(q, k);
                bool need_kron =
                    (k % 2 == 0) && (k % ad != 0) && (lcm64(q, k) % ad == 0);
                int64_t bd = need_kron ? beta_disc(sp, q) : 0;
                std::vector<int64_t> ys;
                for (int64_t y : units) {
                    int64_t yr = q == 1 ? 1 : y;
                    if (mod_pos(yr - 1, g) != 0) continue;
                    if (need_kron && kronecker(bd, yr) != 1) continue;
                    ys.push_back(y);
                }
                double coeff =
                    static_cast<double>(moebius(static_cast<uint64_t>(k))) /
                    static_cast<double>(field_degree(sp, q, k));
                for (size_t zi = 0; zi < units.size(); ++zi) {
                    Complex s(0.0, 0.0);
                    for (int64_t y : ys) s += roots[mod_pos(units[zi] * y, q)];
                    U[u][zi] += coeff * s;
                }
            }
        }
        for (size_t zi = 0; zi < units.size(); ++zi) {
            Complex term = roots[mod_pos(-n * units[zi], q)];
            for (int i = 0; i < 3; ++i) term *= U[slot[i]][zi];
            total += term.real();
        }
    }

    SingularSeriesEstimate est;
    est.value = 0.5 * total;
    est.rational_part = Rat(1);
    est.transcendental_part = RealWithError{1.0, 0.0};
    est.truncation = Truncation{0, kmax, qmax};
    est.tail_estimate = 20.0 / static_cast<double>(kmax) +
                        20.0 / static_cast<double>(qmax);
    return est;
}

namespace {

// Searches for residues (x1, x2, x3) mod d, each in the delta-support of
// its base, with x1 + x2 + x3 = n (mod d).
bool find_local_witness(const TripleSpec& triple, int64_t n, int64_t d,
                        std::array<int64_t, 3>& witness) {
    std::array<std::vector<int64_t>, 3> sup;
    std::vector<char> in3(d, 0);
    for (int i = 0; i < 3; ++i) sup[i] = delta_support(triple.specs[i], d);
    for (int64_t x : sup[2]) in3[x] = 1;
    int64_t nr = mod_pos(n, d);
    for (int64_t x1 : sup[0])
        for (int64_t x2 : sup[1]) {
            int64_t x3 = mod_pos(nr - x1 - x2, d);
            if (in3[x3]) {
                witness = {x1, x2, x3};
                return true;
            }
        }
    return false;
}

} // namespace

PositivityResult positivity(const TripleSpec& triple, int64_t n) {
    PositivityResult res;
    int64_t D = triple.modulus;
    int64_t ddd = 1;
    for (const auto& s : triple.specs) ddd = lcm64(ddd, s.delta);

    std::array<int64_t, 3> witness{};
    if (!find_local_witness(triple, n, D, witness)) {
        res.vanishing_modulus = D;
        return res;
    }
    if (D % 2 != 0) {
        Rat s2 = (ddd % 2 != 0) ? sigma_p_closed(triple, n, 2)
                                : sigma_d(triple, n, 2);
        if (s2 == 0) {
            res.vanishing_modulus = 2;
            return res;
        }
    }
    if (D % 3 != 0 && ddd % 3 != 0) {
        if (sigma_p_closed(triple, n, 3) == 0) {
            res.vanishing_modulus = 3;
            return res;
        }
    }
    // sigma(p) > 0 for every prime p >= 5 away from the discriminants, and
    // odd primes dividing a discriminant divide D; p = 2 is handled above.
    res.positive = true;
    res.witness = witness;
    res.witness_modulus = D;
    return res;
}

std::vector<int64_t> congruence_table(int64_t a) {
    ArtinSpec spec = artin_spec(a);
    TripleSpec triple = make_triple(a, a, a);
    int64_t D = triple.modulus;
    int64_t M = lcm64(6, std::abs(spec.delta));

    std::vector<int64_t> sup = delta_support(spec, D);
    std::vector<char> sum3(D, 0);
    {
        std::vector<char> sum2(D, 0);
        for (int64_t x : sup)
            for (int64_t y : sup) sum2[mod_pos(x + y, D)] = 1;
        for (int64_t s = 0; s < D; ++s)
            if (sum2[s])
                for (int64_t x : sup) sum3[mod_pos(s + x, D)] = 1;
    }

    bool h3 = spec.h % 3 == 0;
    std::vector<int64_t> out;
    for (int64_t m = 0; m < M; ++m) {
        if (!sum3[mod_pos(m, D)]) continue;
        if (D % 2 != 0) {
            // With a single base, 2 !| D means 2 !| delta; closed form at 2
            // vanishes exactly for even n.
            if (m % 2 == 0) continue;
        }
        if (D % 3 != 0) {
            // All three power indices share h: sigma(3) vanishes iff
            // 3 | h and 3 !| n (the two-of-three case cannot occur).
            if (h3 && m % 3 != 0) continue;
        }
        out.push_back(m);
    }
    return out;
}

Rat positivity_floor_diagnostic(const TripleSpec& triple) {
    Rat r(1);
    for (const auto& s : triple.specs) {
        Rat num(static_cast<long>(euler_phi(static_cast<uint64_t>(s.h))));
        Rat den = rat_i64(s.delta) * rat_i64(s.delta) * rat_i64(s.h);
        r *= num / den;
    }
    return r;
}

NonfactorizationReport nonfactorization_witness() {
    NonfactorizationReport rep;
    ArtinSpec spec = artin_spec(-759375);
    TripleSpec triple = make_triple(-759375, -759375, -759375);
    rep.support_mod15 = delta_support(spec, 15);
    rep.support_mod3 = delta_support(spec, 3);
    rep.support_mod5 = delta_support(spec, 5);
    rep.sigma15_zero_at_7 = (sigma_d(triple, 7, 15) == 0);
    rep.witness_mod3 = {1, 1, 2};
    rep.witness_mod5 = {4, 4, 4};
    bool pos = true;
    for (int64_t x : rep.witness_mod3) pos = pos && delta_ratio(spec, x, 3) > 0;
    for (int64_t y : rep.witness_mod5) pos = pos && delta_ratio(spec, y, 5) > 0;
    pos = pos && mod_pos(1 + 1 + 2, 3) == mod_pos(7, 3) &&
          mod_pos(4 + 4 + 4, 5) == mod_pos(7, 5);
    rep.witnesses_positive = pos;
    rep.all_ok = pos && rep.sigma15_zero_at_7 &&
                 rep.support_mod15 == std::vector<int64_t>{7, 13, 14} &&
                 rep.support_mod3 == std::vector<int64_t>{1, 2} &&
                 rep.support_mod5 == std::vector<int64_t>{2, 3, 4};
    return rep;
}

} // namespace artin
