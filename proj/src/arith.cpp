#include "artin/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace artin {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int64_t gcd64(int64_t a, int64_t b) {
    return std::gcd(a, b);
}

int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return std::abs(a) / std::gcd(a, b) * std::abs(b);
}

uint64_t Factorization::value() const {
    uint64_t v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

bool Factorization::squarefree() const {
    for (auto [p, e] : factors)
        if (e > 1) return false;
    return true;
}

namespace {

bool miller_rabin(uint64_t n) {
    // n odd, n >= 3. Witness set is deterministic below 2^64.
    static constexpr std::array<uint64_t, 12> witnesses = {2,  3,  5,  7,  11, 13,
                                                           17, 19, 23, 29, 31, 37};
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t w : witnesses) {
        uint64_t a = w % n;
        if (a == 0) continue;
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t pollard_rho(uint64_t n) {
    // Brent's cycle variant with deterministic increments.
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t q = 1;
        int steps = 0;
        while (d == 1) {
            x = mulmod(x, x, n) + c;
            if (x >= n) x -= n;
            y = mulmod(y, y, n) + c;
            if (y >= n) y -= n;
            y = mulmod(y, y, n) + c;
            if (y >= n) y -= n;
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod(q, diff, n);
            if (q == 0) {
                // The running product collected every factor of n; the last
                // difference alone may still split n (e.g. n a prime square).
                d = std::gcd(diff, n);
                break;
            }
            if (++steps % 64 == 0) {
                d = std::gcd(q, n);
                if (d != 1) break;
            }
        }
        if (d == 1 && q != 0) d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime_u64(uint64_t m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if ((m & 1) == 0) return false;
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    return miller_rabin(m);
}

bool is_prime(int64_t m) {
    return m >= 2 && is_prime_u64(static_cast<uint64_t>(m));
}

Factorization factorize(uint64_t m) {
    if (m == 0) throw domain_error("factorize: argument must be positive");
    Factorization f;
    if (m == 1) return f;
    std::vector<uint64_t> primes;
    // Trial division by 2, 3 and a 2,3-wheel up to 10^6 strips everything the
    // desk-scale callers produce; Pollard rho handles the general 64-bit case.
    for (uint64_t p : {2ull, 3ull}) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    static constexpr int wheel[2] = {2, 4}; // 5, 7, 11, 13, ...
    int w = 0;
    for (uint64_t p = 5; p <= 1000000 && p * p <= m; p += wheel[w], w ^= 1) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    if (m > 1) factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    for (uint64_t p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

int moebius(uint64_t m) {
    Factorization f = factorize(m);
    if (!f.squarefree()) return 0;
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

uint64_t euler_phi(uint64_t m) {
    Factorization f = factorize(m);
    uint64_t r = m;
    for (auto [p, e] : f.factors) r = r / p * (p - 1);
    return r;
}

int64_t squarefree_kernel(int64_t a) {
    if (a == 0) throw domain_error("squarefree_kernel: argument must be nonzero");
    uint64_t mag = a > 0 ? static_cast<uint64_t>(a)
                         : static_cast<uint64_t>(-(a + 1)) + 1;
    Factorization f = factorize(mag);
    int64_t k = 1;
    for (auto [p, e] : f.factors)
        if (e & 1) k *= static_cast<int64_t>(p);
    return a > 0 ? k : -k;
}

int kronecker(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        if (a < 0) sign = -sign;
        n = -n;
    }
    // Strip factors of 2 from the denominator.
    if ((n & 1) == 0) {
        if ((a & 1) == 0) return 0;
        while ((n & 1) == 0) {
            n >>= 1;
            int64_t r = a & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
    }
    if (n == 1) return sign;
    // Jacobi symbol for odd n > 1.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            int64_t r = n & 7;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

std::vector<uint32_t> primes_up_to(uint32_t limit) {
    std::vector<uint32_t> ps;
    if (limit < 2) return ps;
    std::vector<bool> comp(limit + 1, false);
    for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= limit; ++i)
        if (!comp[i])
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= limit; j += i)
                comp[j] = true;
    for (uint32_t i = 2; i <= limit; ++i)
        if (!comp[i]) ps.push_back(i);
    return ps;
}

Rat rat_i64(int64_t num, int64_t den) {
    Rat r;
    r.get_num() = Int(static_cast<long>(num));
    r.get_den() = Int(static_cast<long>(den));
    r.canonicalize();
    return r;
}

double to_double(const Rat& r) {
    return mpq_get_d(r.get_mpq_t());
}

std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace artin
