#include "ppdiag/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ppdiag {

uint64_t Bitset::count() const {
    uint64_t total = 0;
    for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
    return total;
}

std::vector<uint64_t> Bitset::to_vector() const {
    std::vector<uint64_t> out;
    out.reserve(count());
    for (uint64_t i = 0; i < size_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

SystemParams::SystemParams(uint64_t n_, uint64_t c_, PrimeModulus p_)
    : n(n_), c(c_), p(p_) {
    if (n < 2)
        throw std::invalid_argument("SystemParams: exponent must be >= 2");
    if (c >= p.value())
        throw std::invalid_argument("SystemParams: c must lie in [0, p)");
}

uint64_t step(uint64_t x, const SystemParams& params) {
    uint64_t y = pow_mod(x, params.n, params.p) + params.c;
    uint64_t p = params.p.value();
    return y >= p ? y - p : y;
}

OrbitInfo orbit_info(uint64_t x, const SystemParams& params) {
    uint64_t tortoise = step(x, params);
    uint64_t hare = step(tortoise, params);
    while (tortoise != hare) {
        tortoise = step(tortoise, params);
        hare = step(step(hare, params), params);
    }

    uint64_t preperiod = 0;
    tortoise = x;
    while (tortoise != hare) {
        tortoise = step(tortoise, params);
        hare = step(hare, params);
        ++preperiod;
    }

    uint64_t period = 1;
    hare = step(tortoise, params);
    while (tortoise != hare) {
        hare = step(hare, params);
        ++period;
    }
    return OrbitInfo{x, preperiod, period};
}

PeriodicSet periodic_points_naive(const SystemParams& params) {
    const uint64_t p = params.p.value();
    Bitset members(p);
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t y = x;
        for (uint64_t i = 0; i < p; ++i) y = step(y, params);
        for (uint64_t i = 0; i < p; ++i) {
            members.set(y);
            y = step(y, params);
        }
    }
    return PeriodicSet{params, std::move(members)};
}

std::vector<uint64_t> power_table(uint64_t n, PrimeModulus p) {
    std::vector<uint64_t> table(p.value());
    for (uint64_t x = 0; x < p.value(); ++x) table[x] = pow_mod(x, n, p);
    return table;
}

PeriodicScanner::PeriodicScanner(uint64_t n, PrimeModulus p)
    : n_(n), p_(p.value()), pow_(power_table(n, p)),
      state_(p.value(), 0), path_pos_(p.value(), 0), members_(p.value()) {
    if (n < 2)
        throw std::invalid_argument("PeriodicScanner: exponent must be >= 2");
    path_.reserve(p_);
}

const Bitset& PeriodicScanner::scan(uint64_t c) {
    std::fill(state_.begin(), state_.end(), 0);
    members_.clear();

    for (uint64_t start = 0; start < p_; ++start) {
        if (state_[start] != 0) continue;
        path_.clear();
        uint64_t x = start;
        while (state_[x] == 0) {
            state_[x] = 1;
            path_pos_[x] = path_.size();
            path_.push_back(x);
            uint64_t y = pow_[x] + c;
            x = y >= p_ ? y - p_ : y;
        }
        // Meeting the current path closes a new cycle: everything from the
        // first repeated vertex to the path end is periodic. Meeting a
        // resolved vertex means the whole path feeds an existing component
        // and is preperiodic.
        if (state_[x] == 1) {
            for (uint64_t k = path_pos_[x]; k < path_.size(); ++k)
                members_.set(path_[k]);
        }
        for (uint64_t v : path_) state_[v] = 2;
    }
    return members_;
}

PeriodicSet periodic_points(const SystemParams& params) {
    PeriodicScanner scanner(params.n, params.p);
    return PeriodicSet{params, scanner.scan(params.c)};
}

bool is_bijective(uint64_t n, PrimeModulus p) {
    return gcd(n, p.value() - 1) == 1;
}

std::vector<std::pair<uint64_t, uint64_t>> functional_graph(const SystemParams& params) {
    const uint64_t p = params.p.value();
    std::vector<std::pair<uint64_t, uint64_t>> edges;
    edges.reserve(p);
    std::vector<uint64_t> pow = power_table(params.n, params.p);
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t y = pow[x] + params.c;
        edges.emplace_back(x, y >= p ? y - p : y);
    }
    return edges;
}

} // namespace ppdiag
