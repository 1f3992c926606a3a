#include "ppdiag/numtheory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ppdiag {

namespace {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(uint64_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeModulus: " + std::to_string(p) + " is not prime");
}

uint64_t pow_mod(uint64_t base, uint64_t exp, PrimeModulus p) {
    return pow_mod_u64(base, exp, p.value());
}

uint64_t gcd(uint64_t a, uint64_t b) {
    return std::gcd(a, b);
}

std::vector<PrimeModulus> primes_up_to(uint64_t limit) {
    std::vector<PrimeModulus> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(PrimeModulus(i));
    return primes;
}

std::vector<PrimeModulus> first_primes(uint64_t m) {
    if (m == 0) throw std::invalid_argument("first_primes: m must be >= 1");
    // p_m < m (ln m + ln ln m) for m >= 6; small m handled by a fixed bound.
    uint64_t limit = 15;
    if (m >= 6) {
        double dm = static_cast<double>(m);
        limit = static_cast<uint64_t>(dm * (std::log(dm) + std::log(std::log(dm)))) + 1;
    }
    std::vector<PrimeModulus> primes = primes_up_to(limit);
    while (primes.size() < m) {
        limit *= 2;
        primes = primes_up_to(limit);
    }
    primes.erase(primes.begin() + static_cast<std::ptrdiff_t>(m), primes.end());
    return primes;
}

ResidueClass classify_power_residue(uint64_t a, uint64_t n, PrimeModulus p) {
    a %= p.value();
    if (a == 0) return ResidueClass::Zero;
    uint64_t e = (p.value() - 1) / gcd(n, p.value() - 1);
    return pow_mod(a, e, p) == 1 ? ResidueClass::Residue : ResidueClass::NonResidue;
}

uint64_t count_power_residues(uint64_t n, PrimeModulus p) {
    return (p.value() - 1) / gcd(n, p.value() - 1);
}

uint64_t num_nth_roots(uint64_t a, uint64_t n, PrimeModulus p) {
    switch (classify_power_residue(a, n, p)) {
    case ResidueClass::Zero: return 1;
    case ResidueClass::Residue: return gcd(n, p.value() - 1);
    case ResidueClass::NonResidue: return 0;
    }
    return 0;
}

} // namespace ppdiag
