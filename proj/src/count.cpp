#include "artin/count.hpp"

#include "artin/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace artin {

namespace {

struct MarkedLists {
    std::vector<int32_t> p1, p2;     // admissible primes per role, ascending
    std::vector<double> logp1, logp2;
    std::vector<double> weight3;     // log p over admissible p3, 0 elsewhere
};

bool excluded(int64_t p, const TripleSpec& triple) {
    if (p == 2 || p == 3) return true;
    for (const auto& s : triple.specs)
        if (std::abs(s.delta) % p == 0) return true;
    return false;
}

MarkedLists build_lists(const TripleSpec* triple, int64_t n, const SieveData& data,
                        bool exclude_small) {
    MarkedLists ml;
    const Bitset* marks[3] = {nullptr, nullptr, nullptr};
    if (triple) {
        for (int i = 0; i < 3; ++i) {
            marks[i] = data.roots_for(triple->specs[i].a);
            if (!marks[i])
                throw domain_error("count: sieve has no marks for base " +
                                   std::to_string(triple->specs[i].a));
        }
    }
    ml.weight3.assign(static_cast<size_t>(n) + 1, 0.0);
    for (int64_t p = 2; p <= std::min<int64_t>(n, data.limit); ++p) {
        if (!data.prime_bits.test(static_cast<size_t>(p))) continue;
        if (triple && exclude_small && excluded(p, *triple)) continue;
        double lp = std::log(static_cast<double>(p));
        if (!triple || marks[0]->test(static_cast<size_t>(p))) {
            ml.p1.push_back(static_cast<int32_t>(p));
            ml.logp1.push_back(lp);
        }
        if (!triple || marks[1]->test(static_cast<size_t>(p))) {
            ml.p2.push_back(static_cast<int32_t>(p));
            ml.logp2.push_back(lp);
        }
        if (!triple || marks[2]->test(static_cast<size_t>(p)))
            ml.weight3[static_cast<size_t>(p)] = lp;
    }
    return ml;
}

struct CountResult {
    double v = 0.0;
    uint64_t count = 0;
};

// Chunked over p1 with a fixed chunk size and in-order compensated
// combination, so results do not depend on the thread count.
CountResult count_core(const MarkedLists& ml, int64_t n, int threads) {
    PairKernelFn kernel = select_pair_kernel();
    const size_t chunk = 256;
    size_t nchunks = (ml.p1.size() + chunk - 1) / chunk;
    std::vector<CountResult> parts(nchunks);

    auto work = [&](size_t ci) {
        size_t lo = ci * chunk, hi = std::min(ml.p1.size(), lo + chunk);
        double v = 0.0, comp = 0.0;
        uint64_t cnt = 0;
        for (size_t i = lo; i < hi; ++i) {
            int64_t rem = n - ml.p1[i];
            if (rem < 4) break; // p2 + p3 >= 4
            size_t m = static_cast<size_t>(
                std::upper_bound(ml.p2.begin(), ml.p2.end(),
                                 static_cast<int32_t>(rem - 2)) -
                ml.p2.begin());
            PairSum ps = kernel(ml.p2.data(), ml.logp2.data(), m,
                                static_cast<int32_t>(rem), ml.weight3.data());
            cnt += ps.count;
            double term = ml.logp1[i] * ps.weighted - comp;
            double t = v + term;
            comp = (t - v) - term;
            v = t;
        }
        parts[ci] = CountResult{v, cnt};
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

    CountResult total;
    double comp = 0.0;
    for (const auto& part : parts) {
        total.count += part.count;
        double term = part.v - comp;
        double t = total.v + term;
        comp = (t - total.v) - term;
        total.v = t;
    }
    return total;
}

} // namespace

RepresentationReport count_representations(const TripleSpec& triple, int64_t n,
                                           const SieveData& data,
                                           bool exclude_small, int threads) {
    if (n < 2 || n > data.limit)
        throw sieve_too_small("count_representations: n exceeds the sieve limit");
    MarkedLists ml = build_lists(&triple, n, data, exclude_small);
    CountResult c = count_core(ml, n, threads);
    RepresentationReport rep;
    rep.n = n;
    rep.weighted_sum = c.v;
    rep.raw_count = c.count;
    return rep;
}

RepresentationReport compare(const TripleSpec& triple, int64_t n,
                             const SieveData& data, int64_t pmax,
                             bool exclude_small, int threads) {
    RepresentationReport rep =
        count_representations(triple, n, data, exclude_small, threads);
    rep.predicted = euler_constant(triple, n, pmax, threads);
    double denom = rep.predicted.value * static_cast<double>(n) *
                   static_cast<double>(n);
    if (denom > 0.0) {
        rep.ratio_defined = true;
        rep.ratio = rep.weighted_sum / denom;
    }
    return rep;
}

ClassicalReport classical_compare(int64_t n, const SieveData& data, int64_t pmax,
                                  int threads) {
    if (n < 2 || n > data.limit)
        throw sieve_too_small("classical_compare: n exceeds the sieve limit");
    MarkedLists ml = build_lists(nullptr, n, data, false);
    CountResult c = count_core(ml, n, threads);
    ClassicalReport rep;
    rep.n = n;
    rep.weighted_sum = c.v;
    rep.raw_count = c.count;
    rep.predicted = classical_constant(n, pmax);
    rep.ratio = rep.weighted_sum /
                (rep.predicted * static_cast<double>(n) * static_cast<double>(n));
    return rep;
}

} // namespace artin
