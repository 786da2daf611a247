#include "artin/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace artin {

size_t Bitset::count() const {
    size_t c = 0;
    for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
    return c;
}

const Bitset* SieveData::roots_for(int64_t a) const {
    for (const auto& [base, bits] : root_bits)
        if (base == a) return &bits;
    return nullptr;
}

SieveData sieve(int64_t limit) {
    if (limit < 10) throw domain_error("sieve: limit must be at least 10");
    if (limit > kMaxSieveLimit)
        throw limit_too_large("sieve: limit exceeds the configured memory cap");
    SieveData data;
    data.limit = limit;
    data.prime_bits = Bitset(static_cast<size_t>(limit) + 1);

    int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(limit))) + 2;
    std::vector<uint32_t> base = primes_up_to(static_cast<uint32_t>(root));

    const int64_t seg = int64_t(1) << 20;
    std::vector<char> mark(seg);
    for (int64_t lo = 2; lo <= limit; lo += seg) {
        int64_t hi = std::min(limit, lo + seg - 1);
        std::fill(mark.begin(), mark.begin() + (hi - lo + 1), 1);
        for (uint32_t p : base) {
            int64_t pp = p;
            if (pp * pp > hi) break;
            int64_t start = std::max(pp * pp, (lo + pp - 1) / pp * pp);
            for (int64_t m = start; m <= hi; m += pp) mark[m - lo] = 0;
        }
        for (int64_t m = lo; m <= hi; ++m)
            if (mark[m - lo]) data.prime_bits.set(static_cast<size_t>(m));
    }
    return data;
}

bool has_primitive_root(const ArtinSpec& spec, int64_t p) {
    if (!is_prime(p)) throw domain_error("has_primitive_root: p must be prime");
    int64_t ar = spec.a % p;
    if (ar < 0) ar += p;
    if (ar == 0) return false;
    if (p == 2) return true; // odd a generates F_2^* = {1}
    uint64_t order = static_cast<uint64_t>(p) - 1;
    for (auto [q, e] : factorize(order).factors) {
        if (powmod(static_cast<uint64_t>(ar), order / q,
                   static_cast<uint64_t>(p)) == 1)
            return false;
    }
    return true;
}

void mark_primitive_roots(SieveData& data, const ArtinSpec& spec) {
    if (data.roots_for(spec.a)) return;
    Bitset bits(static_cast<size_t>(data.limit) + 1);
    // Factor p-1 by trial division over the base primes; every cofactor
    // after that is a single prime since p - 1 < limit <= root^2.
    std::vector<uint32_t> base = primes_up_to(static_cast<uint32_t>(
        std::sqrt(static_cast<double>(data.limit)) + 2));
    std::vector<uint64_t> qs;
    for (int64_t p = 2; p <= data.limit; ++p) {
        if (!data.prime_bits.test(static_cast<size_t>(p))) continue;
        int64_t ar = spec.a % p;
        if (ar < 0) ar += p;
        if (ar == 0) continue;
        if (p == 2) {
            bits.set(2);
            continue;
        }
        uint64_t order = static_cast<uint64_t>(p) - 1;
        uint64_t m = order;
        qs.clear();
        for (uint32_t q : base) {
            if (static_cast<uint64_t>(q) * q > m) break;
            if (m % q == 0) {
                qs.push_back(q);
                while (m % q == 0) m /= q;
            }
        }
        if (m > 1) qs.push_back(m);
        bool prim = true;
        for (uint64_t q : qs)
            if (powmod(static_cast<uint64_t>(ar), order / q,
                       static_cast<uint64_t>(p)) == 1) {
                prim = false;
                break;
            }
        if (prim) bits.set(static_cast<size_t>(p));
    }
    data.root_bits.emplace_back(spec.a, std::move(bits));
}

namespace {

void put_u64(FILE* f, uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    std::fwrite(b, 1, 8, f);
}

uint64_t get_u64(FILE* f) {
    unsigned char b[8];
    if (std::fread(b, 1, 8, f) != 8)
        throw domain_error("sieve cache: truncated file");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

void put_bits(FILE* f, const Bitset& bits) {
    for (uint64_t w : bits.words()) put_u64(f, w);
}

void get_bits(FILE* f, Bitset& bits) {
    for (uint64_t& w : bits.words()) w = get_u64(f);
}

} // namespace

void save_sieve(const SieveData& data, const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw domain_error("sieve cache: cannot open " + path + " for writing");
    std::fwrite("AGSV1", 1, 5, f);
    put_u64(f, static_cast<uint64_t>(data.limit));
    put_u64(f, data.root_bits.size());
    for (const auto& [a, bits] : data.root_bits)
        put_u64(f, static_cast<uint64_t>(a));
    put_bits(f, data.prime_bits);
    for (const auto& [a, bits] : data.root_bits) put_bits(f, bits);
    std::fclose(f);
}

SieveData load_sieve(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw domain_error("sieve cache: cannot open " + path);
    char magic[5];
    if (std::fread(magic, 1, 5, f) != 5 || std::memcmp(magic, "AGSV1", 5) != 0) {
        std::fclose(f);
        throw domain_error("sieve cache: bad magic");
    }
    SieveData data;
    try {
        data.limit = static_cast<int64_t>(get_u64(f));
        if (data.limit < 10 || data.limit > kMaxSieveLimit)
            throw domain_error("sieve cache: implausible limit");
        uint64_t nbases = get_u64(f);
        if (nbases > 64) throw domain_error("sieve cache: implausible base count");
        std::vector<int64_t> bases(nbases);
        for (auto& a : bases) a = static_cast<int64_t>(get_u64(f));
        data.prime_bits = Bitset(static_cast<size_t>(data.limit) + 1);
        get_bits(f, data.prime_bits);
        for (int64_t a : bases) {
            Bitset bits(static_cast<size_t>(data.limit) + 1);
            get_bits(f, bits);
            data.root_bits.emplace_back(a, std::move(bits));
        }
    } catch (...) {
        std::fclose(f);
        throw;
    }
    std::fclose(f);
    return data;
}

} // namespace artin
