#pragma once

// Modular-arithmetic and residue-theoretic primitives: powering, gcd,
// prime generation, and n-power residue classification via the
// generalized Euler criterion  a^((p-1)/gcd(n,p-1)) == 1.

#include <cstdint>
#include <vector>

namespace ppdiag {

// Deterministic Miller-Rabin, valid for every 64-bit input.
bool is_prime(uint64_t n);

// A prime modulus, checked at construction.
// Throws std::invalid_argument if the value is not prime.
class PrimeModulus {
public:
    explicit PrimeModulus(uint64_t p);
    uint64_t value() const { return p_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
    friend bool operator<(PrimeModulus a, PrimeModulus b) { return a.p_ < b.p_; }

private:
    uint64_t p_;
};

// base^exp mod p by square-and-multiply (O(log exp) multiplications).
// Convention: pow_mod(b, 0, p) == 1 for every b, including b == 0.
uint64_t pow_mod(uint64_t base, uint64_t exp, PrimeModulus p);

uint64_t gcd(uint64_t a, uint64_t b);

// The first m primes, increasing, starting at 2.
std::vector<PrimeModulus> first_primes(uint64_t m);

// Every prime <= limit, increasing.
std::vector<PrimeModulus> primes_up_to(uint64_t limit);

// Classification of a in F_p under x -> x^n: Zero only for a == 0,
// Residue iff x^n = a is solvable with a != 0.
enum class ResidueClass { Zero, Residue, NonResidue };

ResidueClass classify_power_residue(uint64_t a, uint64_t n, PrimeModulus p);

// Number of nonzero n-power residues: (p-1)/gcd(n, p-1).
uint64_t count_power_residues(uint64_t n, PrimeModulus p);

// Number of x in F_p with x^n = a: gcd(n, p-1) for a nonzero residue,
// 0 for a non-residue, 1 for a == 0.
uint64_t num_nth_roots(uint64_t a, uint64_t n, PrimeModulus p);

} // namespace ppdiag
