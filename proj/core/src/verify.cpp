#include "ppdiag/verify.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "ppdiag/dynamics.hpp"
#include "ppdiag/ppd.hpp"
#include "ppdiag/tpd.hpp"
#include "parallel.hpp"

namespace ppdiag {

Suite parse_suite(std::string_view name) {
    if (name == "desert") return Suite::Desert;
    if (name == "fixed") return Suite::Fixed;
    if (name == "symmetry") return Suite::Symmetry;
    if (name == "oracle") return Suite::Oracle;
    if (name == "bounds") return Suite::Bounds;
    if (name == "all") return Suite::All;
    throw std::invalid_argument("unknown suite '" + std::string(name) +
                                "' (expected desert|fixed|symmetry|oracle|bounds|all)");
}

std::string_view suite_name(Suite suite) {
    switch (suite) {
    case Suite::Desert: return "desert";
    case Suite::Fixed: return "fixed";
    case Suite::Symmetry: return "symmetry";
    case Suite::Oracle: return "oracle";
    case Suite::Bounds: return "bounds";
    case Suite::All: return "all";
    }
    return "?";
}

bool VerifyReport::ok() const {
    for (const SuiteReport& s : suites)
        if (!s.failures.empty()) return false;
    return true;
}

uint64_t VerifyReport::total_checks() const {
    uint64_t total = 0;
    for (const SuiteReport& s : suites) total += s.checks;
    return total;
}

namespace {

// Desert-line law: empirical desert offsets of the built grid equal the
// non-residue offsets, their count matches p-1-(p-1)/gcd(n,p-1), and each
// non-desert line carries exactly its predicted number of fixed points.
void run_desert(SuiteReport& report, uint64_t n, PrimeModulus p) {
    const uint64_t P = p.value();
    const uint64_t d = gcd(n, P - 1);

    ++report.checks;
    std::vector<uint64_t> theory = desert_offsets(n, p);
    if (theory.size() != P - 1 - (P - 1) / d) {
        report.failures.push_back({"desert-count", n, P,
                                   "classified " + std::to_string(theory.size()) +
                                       " desert offsets, formula expects " +
                                       std::to_string(P - 1 - (P - 1) / d)});
        return;
    }
    PpdGrid grid = build_ppd(n, p);
    if (empirical_desert_offsets(grid) != theory) {
        report.failures.push_back({"desert-empirical", n, P,
                                   "grid desert offsets differ from residue classification"});
        return;
    }

    std::vector<uint64_t> pow = power_table(n, p);
    for (uint64_t a = 0; a < P; ++a) {
        LineClass cls = classify_line(a, n, p);
        uint64_t fixed = 0;
        for (uint64_t i = 0; i < P; ++i) {
            uint64_t j = i + a;
            if (j >= P) j -= P;
            uint64_t y = pow[j] + i;
            if (y >= P) y -= P;
            fixed += (y == j);
        }
        if (fixed != cls.fixed_count) {
            report.failures.push_back({"fixed-per-line", n, P,
                                       "offset " + std::to_string(a) + " carries " +
                                           std::to_string(fixed) + " fixed points, expected " +
                                           std::to_string(cls.fixed_count)});
            return;
        }
    }
    ++report.passes;
}

void run_fixed(SuiteReport& report, uint64_t n, PrimeModulus p) {
    ++report.checks;
    uint64_t total = fixed_points_total(n, p);
    if (total == p.value()) {
        ++report.passes;
    } else {
        report.failures.push_back({"fixed-total", n, p.value(),
                                   "counted " + std::to_string(total) +
                                       " fixed points, expected " +
                                       std::to_string(p.value())});
    }
}

void run_symmetry(SuiteReport& report, uint64_t n, PrimeModulus p) {
    if (n % 2 == 0) return;
    ++report.checks;
    if (check_odd_symmetry(n, p)) {
        ++report.passes;
    } else {
        report.failures.push_back({"odd-symmetry", n, p.value(),
                                   "reduced diagram is not symmetric under (c,x) -> (-c,-x)"});
    }
}

void run_oracle(SuiteReport& report, uint64_t n, PrimeModulus p) {
    ++report.checks;
    PeriodicScanner scanner(n, p);
    for (uint64_t c = 0; c < p.value(); ++c) {
        SystemParams params(n, c, p);
        if (scanner.scan(c) != periodic_points_naive(params).members) {
            report.failures.push_back({"oracle", n, p.value(),
                                       "fast detector disagrees with reference scan at c = " +
                                           std::to_string(c)});
            return;
        }
    }
    ++report.passes;
}

void run_bounds(SuiteReport& report, uint64_t n, PrimeModulus p) {
    const uint64_t P = p.value();
    ++report.checks;
    PerBounds bounds = per_bounds(n, p);
    uint64_t per = per_count(n, p);
    if (per < bounds.lower || per > bounds.upper_corrected) {
        report.failures.push_back({"bounds", n, P,
                                   "per = " + std::to_string(per) + " outside [" +
                                       std::to_string(bounds.lower) + ", " +
                                       std::to_string(bounds.upper_corrected) + "]"});
        return;
    }
    if (gcd(n, P - 1) == 1 && per != P * P) {
        report.failures.push_back({"bounds-bijective", n, P,
                                   "gcd(n, p-1) = 1 but per = " + std::to_string(per) +
                                       " != p^2"});
        return;
    }
    if (per > bounds.upper_paper) {
        report.warnings.push_back({"bounds-verbatim", n, P,
                                   "per = " + std::to_string(per) +
                                       " exceeds upper_paper = " +
                                       std::to_string(bounds.upper_paper)});
    }
    ++report.passes;
}

// One prime, all exponents. Partial reports are merged in prime order, so
// the full report is identical for every thread count.
SuiteReport run_prime(Suite suite, PrimeModulus p, uint64_t n_min, uint64_t n_max) {
    SuiteReport report;
    for (uint64_t n = n_min; n <= n_max; ++n) {
        switch (suite) {
        case Suite::Desert: run_desert(report, n, p); break;
        case Suite::Fixed: run_fixed(report, n, p); break;
        case Suite::Symmetry: run_symmetry(report, n, p); break;
        case Suite::Oracle: run_oracle(report, n, p); break;
        case Suite::Bounds: run_bounds(report, n, p); break;
        case Suite::All: break;
        }
    }
    return report;
}

SuiteReport run_one(Suite suite, uint64_t max_p, uint64_t n_min, uint64_t n_max,
                    unsigned threads) {
    std::vector<PrimeModulus> primes = primes_up_to(max_p);
    std::vector<SuiteReport> partial(primes.size());
    detail::parallel_chunks(primes.size(), threads, [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i)
            partial[i] = run_prime(suite, primes[i], n_min, n_max);
    });

    SuiteReport report;
    report.suite = suite_name(suite);
    for (SuiteReport& part : partial) {
        report.checks += part.checks;
        report.passes += part.passes;
        for (VerifyIssue& f : part.failures) report.failures.push_back(std::move(f));
        for (VerifyIssue& w : part.warnings) report.warnings.push_back(std::move(w));
    }
    return report;
}

} // namespace

VerifyReport verify_suite(Suite suite, uint64_t max_p, uint64_t n_min,
                          uint64_t n_max, unsigned threads) {
    if (max_p < 2) throw std::invalid_argument("verify_suite: max_p must be >= 2");
    if (n_min < 2) throw std::invalid_argument("verify_suite: n_min must be >= 2");
    if (n_max < n_min) throw std::invalid_argument("verify_suite: empty exponent range");

    VerifyReport report;
    if (suite == Suite::All) {
        for (Suite s : {Suite::Desert, Suite::Fixed, Suite::Symmetry,
                        Suite::Oracle, Suite::Bounds})
            report.suites.push_back(run_one(s, max_p, n_min, n_max, threads));
    } else {
        report.suites.push_back(run_one(suite, max_p, n_min, n_max, threads));
    }
    return report;
}

void print_report(const VerifyReport& report, std::ostream& os) {
    for (const SuiteReport& s : report.suites) {
        os << s.suite << ": " << s.passes << "/" << s.checks << " checks passed";
        if (!s.warnings.empty()) os << ", " << s.warnings.size() << " warning(s)";
        if (!s.failures.empty()) os << ", " << s.failures.size() << " FAILURE(S)";
        os << "\n";
        for (const VerifyIssue& w : s.warnings)
            os << "  WARN " << w.check << " n=" << w.n << " p=" << w.p << ": "
               << w.detail << "\n";
        for (const VerifyIssue& f : s.failures)
            os << "  FAIL " << f.check << " n=" << f.n << " p=" << f.p << ": "
               << f.detail << "\n";
    }
    os << (report.ok() ? "verification passed" : "verification FAILED") << "\n";
}

} // namespace ppdiag
