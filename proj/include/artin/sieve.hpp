#pragma once

// Primality and per-base primitive-root bitsets up to a limit, plus the
// AGSV1 on-disk cache of those bitsets.

#include <cstdint>
#include <string>
#include <vector>

#include "artin/density.hpp"

namespace artin {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    size_t count() const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Primality bits over [0, limit] plus primitive-root bits per marked base.
struct SieveData {
    int64_t limit = 0;
    Bitset prime_bits;
    std::vector<std::pair<int64_t, Bitset>> root_bits; // keyed by base a

    const Bitset* roots_for(int64_t a) const;
};

inline constexpr int64_t kMaxSieveLimit = int64_t(1) << 31;

/// Segmented Eratosthenes; throws limit_too_large above kMaxSieveLimit.
SieveData sieve(int64_t limit);

/// True iff a generates F_p^*: false when p | a; for p = 2, true iff a is
/// odd; otherwise a^((p-1)/q) != 1 (mod p) for every prime q | p-1.
bool has_primitive_root(const ArtinSpec& spec, int64_t p);

/// Fills root_bits for the base, for every prime <= limit.
void mark_primitive_roots(SieveData& data, const ArtinSpec& spec);

/// AGSV1 cache: magic "AGSV1", u64 limit, u64 base count, i64 bases,
/// then the raw bitsets (primality first), 64-bit words little-endian.
void save_sieve(const SieveData& data, const std::string& path);
SieveData load_sieve(const std::string& path);

} // namespace artin
