#pragma once

// Orbit computation for h_c(x) = x^n + c mod p: single steps, Floyd cycle
// detection, the quadratic-time reference scan for periodic points, and a
// linear-time functional-graph detector that must agree with it.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppdiag/numtheory.hpp"

namespace ppdiag {

// Fixed-size bitset over [0, size).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(uint64_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    uint64_t size() const { return size_; }

    bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(uint64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    uint64_t count() const;
    std::vector<uint64_t> to_vector() const;
    std::span<const uint64_t> words() const { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    uint64_t size_ = 0;
    std::vector<uint64_t> words_;
};

// One parametrized system: the map x -> x^n + c over F_p.
// Throws std::invalid_argument unless n >= 2 and 0 <= c < p.
struct SystemParams {
    SystemParams(uint64_t n, uint64_t c, PrimeModulus p);

    uint64_t n;
    uint64_t c;
    PrimeModulus p;
};

// Preperiod and period of one starting point.
// preperiod == 0 exactly when start is itself periodic.
struct OrbitInfo {
    uint64_t start;
    uint64_t preperiod;
    uint64_t period;

    friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

// The periodic points of one system, as a bit-indexed subset of [0, p).
struct PeriodicSet {
    SystemParams params;
    Bitset members;
};

// One application of the map: (x^n + c) mod p.
uint64_t step(uint64_t x, const SystemParams& params);

// Orbit of x via Floyd's tortoise-and-hare, then the standard
// preperiod/period extraction.
OrbitInfo orbit_info(uint64_t x, const SystemParams& params);

// Reference scan: iterate every point p times, then save the next p
// iterates; the union over all starting points is the periodic set.
// Quadratic in p, kept as the trusted slow path.
PeriodicSet periodic_points_naive(const SystemParams& params);

// Same set in O(p) map evaluations via three-state path traversal.
PeriodicSet periodic_points(const SystemParams& params);

// True iff gcd(n, p-1) == 1; then every h_c is a bijection of F_p and
// every point is periodic for every c.
bool is_bijective(uint64_t n, PrimeModulus p);

// The p edges (x, step(x)), in increasing source order.
std::vector<std::pair<uint64_t, uint64_t>> functional_graph(const SystemParams& params);

// x -> x^n mod p for all x in [0, p); shared by whole-diagram builds so
// the per-column cost is one table lookup per step.
std::vector<uint64_t> power_table(uint64_t n, PrimeModulus p);

// Reusable detector for one (n, p): computes periodic sets for many c
// without reallocating. Not thread-safe; use one instance per thread.
class PeriodicScanner {
public:
    PeriodicScanner(uint64_t n, PrimeModulus p);

    // Periodic set of h_c; the reference stays valid until the next scan.
    const Bitset& scan(uint64_t c);

    uint64_t n() const { return n_; }
    uint64_t p() const { return p_; }
    std::span<const uint64_t> table() const { return pow_; }

private:
    uint64_t n_;
    uint64_t p_;
    std::vector<uint64_t> pow_;
    std::vector<uint8_t> state_;   // 0 unvisited, 1 on current path, 2 resolved
    std::vector<uint64_t> path_;
    std::vector<uint64_t> path_pos_;
    Bitset members_;
};

} // namespace ppdiag
