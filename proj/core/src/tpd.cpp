#include "ppdiag/tpd.hpp"

#include <algorithm>
#include <atomic>

#include "ppdiag/dynamics.hpp"
#include "parallel.hpp"

namespace ppdiag {

uint64_t per_count(uint64_t n, PrimeModulus p, unsigned threads) {
    const uint64_t P = p.value();
    if (detail::resolve_threads(threads) <= 1) {
        PeriodicScanner scanner(n, p);
        uint64_t total = 0;
        for (uint64_t c = 0; c < P; ++c) total += scanner.scan(c).count();
        return total;
    }
    // Exact integer chunk sums; the total does not depend on thread count.
    std::atomic<uint64_t> total{0};
    detail::parallel_chunks(P, threads, [&](uint64_t begin, uint64_t end) {
        PeriodicScanner scanner(n, p);
        uint64_t s = 0;
        for (uint64_t c = begin; c < end; ++c) s += scanner.scan(c).count();
        total.fetch_add(s, std::memory_order_relaxed);
    });
    return total.load();
}

PerBounds per_bounds(uint64_t n, PrimeModulus p) {
    const uint64_t P = p.value();
    const uint64_t d = gcd(n, P - 1);
    return PerBounds{P, P * ((P - 1) / d), P * ((P - 1) / d + 1)};
}

std::vector<TpdRecord> tpd_sweep(uint64_t n, uint64_t m, unsigned threads) {
    std::vector<PrimeModulus> primes = first_primes(m);
    std::vector<TpdRecord> records;
    records.resize(m);
    detail::parallel_chunks(m, threads, [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) {
            PrimeModulus p = primes[i];
            PerBounds bounds = per_bounds(n, p);
            records[i] = TpdRecord{p.value(),
                                   n,
                                   gcd(n, p.value() - 1),
                                   per_count(n, p, 1),
                                   bounds.lower,
                                   bounds.upper_paper,
                                   bounds.upper_corrected};
        }
    });
    return records;
}

BranchPartition branch_partition(std::span<const TpdRecord> records) {
    BranchPartition partition;
    for (const TpdRecord& r : records) partition.branches[r.d].push_back(r);
    return partition;
}

std::vector<BranchStats> BranchPartition::stats() const {
    std::vector<BranchStats> out;
    for (const auto& [d, recs] : branches) {
        BranchStats s{d, recs.size(), recs.front().per, recs.front().per};
        for (const TpdRecord& r : recs) {
            s.min_per = std::min(s.min_per, r.per);
            s.max_per = std::max(s.max_per, r.per);
        }
        out.push_back(s);
    }
    return out;
}

std::vector<uint64_t> possible_branch_values(uint64_t n) {
    std::vector<uint64_t> values;
    for (uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (d % 2 == 0 || (n / d) % 2 == 1) values.push_back(d);
    }
    return values;
}

} // namespace ppdiag
