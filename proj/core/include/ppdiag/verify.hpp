#pragma once

// Batch verification driver: runs the theorem checks (desert-line law,
// total fixed points, odd-n symmetry, detector-vs-reference equivalence,
// periodic-count bounds) over all primes up to a limit and a range of
// exponents, reporting failures with counterexample coordinates.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ppdiag {

enum class Suite { Desert, Fixed, Symmetry, Oracle, Bounds, All };

// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct VerifyIssue {
    std::string check;
    uint64_t n;
    uint64_t p;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    uint64_t checks = 0;
    uint64_t passes = 0;
    std::vector<VerifyIssue> failures;
    std::vector<VerifyIssue> warnings;   // bound violations of upper_paper
};

struct VerifyReport {
    std::vector<SuiteReport> suites;

    bool ok() const;
    uint64_t total_checks() const;
};

// Runs one suite (or all of them) for every prime p <= max_p and every
// exponent n in [n_min, n_max]. The symmetry suite skips even n; the
// oracle suite is cubic in p and meant for small limits.
VerifyReport verify_suite(Suite suite, uint64_t max_p, uint64_t n_min = 2,
                          uint64_t n_max = 13, unsigned threads = 0);

void print_report(const VerifyReport& report, std::ostream& os);

} // namespace ppdiag
