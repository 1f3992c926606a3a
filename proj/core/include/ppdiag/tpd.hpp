#pragma once

// Total Periodic Diagram sweeps: Per(h_c, p), the number of marked cells
// in the diagram, computed per prime over an initial prime segment and
// partitioned into branches by d = gcd(n, p-1).

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ppdiag/numtheory.hpp"

namespace ppdiag {

// Bounds on Per(h_c, p). upper_paper = p(p-1)/d counts only the nonzero
// residue lines; upper_corrected = p((p-1)/d + 1) also counts the a = 0
// line and is the bound the invariants enforce. upper_paper is retained
// because it is violated in practice (first at n = 12, p = 13) and the
// bounds checks surface those violations as warnings.
struct PerBounds {
    uint64_t lower;
    uint64_t upper_paper;
    uint64_t upper_corrected;

    friend bool operator==(const PerBounds&, const PerBounds&) = default;
};

// Per-prime summary of one sweep entry.
struct TpdRecord {
    uint64_t p;
    uint64_t n;
    uint64_t d;      // gcd(n, p-1)
    uint64_t per;    // Per(h_c, p)
    uint64_t lower;
    uint64_t upper_paper;
    uint64_t upper_corrected;

    friend bool operator==(const TpdRecord&, const TpdRecord&) = default;
};

struct BranchStats {
    uint64_t d;
    uint64_t count;
    uint64_t min_per;
    uint64_t max_per;
};

// Records grouped by d, each branch in sweep order.
struct BranchPartition {
    std::map<uint64_t, std::vector<TpdRecord>> branches;

    std::vector<BranchStats> stats() const;
};

// Sum over c of |periodic_points(n, c, p)|, computed column by column in
// O(p) memory (the grid is never materialized).
uint64_t per_count(uint64_t n, PrimeModulus p, unsigned threads = 1);

PerBounds per_bounds(uint64_t n, PrimeModulus p);

// One record per prime in first_primes(m), in prime order regardless of
// parallelism (threads == 0 picks hardware concurrency).
std::vector<TpdRecord> tpd_sweep(uint64_t n, uint64_t m, unsigned threads = 0);

BranchPartition branch_partition(std::span<const TpdRecord> records);

// The values d = gcd(n, k) can take over even k, i.e. the branch keys
// that can occur among odd primes: divisors d of n with d even or n/d
// odd. Occurrence in any finite sweep is not implied.
std::vector<uint64_t> possible_branch_values(uint64_t n);

} // namespace ppdiag
