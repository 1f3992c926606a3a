// ppdiag: periodic-point diagrams of x -> x^n + c over prime fields.
//
//   ppdiag ppd    --n 2 --p 71 --format pbm --out ppd.pbm
//   ppdiag tpd    --n 12 --primes 100 --out sweep.csv
//   ppdiag graph  --n 2 --c 3 --p 7 --out orbit.dot
//   ppdiag verify --suite all --max-p 60
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ppdiag/dynamics.hpp"
#include "ppdiag/numtheory.hpp"
#include "ppdiag/ppd.hpp"
#include "ppdiag/render.hpp"
#include "ppdiag/tpd.hpp"
#include "ppdiag/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

ppdiag::PrimeModulus checked_prime(uint64_t p) {
    return ppdiag::PrimeModulus(p);   // throws std::invalid_argument if composite
}

int run_ppd(uint64_t n, uint64_t p, const ppdiag::RenderOptions& opts, bool naive,
            unsigned threads) {
    ppdiag::PrimeModulus modulus = checked_prime(p);
    ppdiag::PpdGrid grid = naive ? ppdiag::build_ppd_naive(n, modulus)
                                 : ppdiag::build_ppd(n, modulus, threads);
    if (opts.format == ppdiag::RenderOptions::Format::Pbm) {
        ppdiag::write_output(opts.out_path, ppdiag::render_ppd_pbm(grid, opts.invert));
    } else {
        ppdiag::write_output(opts.out_path, ppdiag::render_ppd_ascii(grid));
    }
    return kExitSuccess;
}

int run_tpd(uint64_t n, uint64_t m, const std::string& out, unsigned threads) {
    auto records = ppdiag::tpd_sweep(n, m, threads);
    ppdiag::write_output(out, ppdiag::export_tpd_csv(records));

    auto partition = ppdiag::branch_partition(records);
    std::cerr << "swept " << m << " primes, per in branches:";
    for (const auto& stats : partition.stats())
        std::cerr << " d=" << stats.d << " (" << stats.count << " primes, per "
                  << stats.min_per << ".." << stats.max_per << ")";
    std::cerr << "\npossible d over odd primes:";
    for (uint64_t d : ppdiag::possible_branch_values(n)) std::cerr << " " << d;
    std::cerr << "\n";
    return kExitSuccess;
}

int run_graph(uint64_t n, uint64_t c, uint64_t p, const std::string& out) {
    ppdiag::SystemParams params(n, c, checked_prime(p));
    ppdiag::write_output(out, ppdiag::export_graph_dot(params));
    return kExitSuccess;
}

int run_verify(const std::string& suite, uint64_t max_p, uint64_t n_min,
               uint64_t n_max, unsigned threads) {
    ppdiag::VerifyReport report =
        ppdiag::verify_suite(ppdiag::parse_suite(suite), max_p, n_min, n_max, threads);
    ppdiag::print_report(report, std::cout);
    return report.ok() ? kExitSuccess : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic-point diagrams of x -> x^n + c over prime fields"};
    app.require_subcommand(1);

    uint64_t n = 2;
    uint64_t c = 0;
    uint64_t p = 7;
    uint64_t primes = 100;
    uint64_t max_p = 200;
    uint64_t n_min = 2;
    uint64_t n_max = 13;
    unsigned threads = 0;
    bool invert = false;
    bool naive = false;
    std::string format = "ascii";
    std::string out;
    std::string suite = "all";

    CLI::App* ppd = app.add_subcommand("ppd", "render the periodic point diagram for (n, p)");
    ppd->add_option("--n", n, "exponent (>= 2)")->required()->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    ppd->add_option("--p", p, "prime modulus")->required();
    ppd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pbm", "ascii"}))
        ->capture_default_str();
    ppd->add_flag("--invert", invert, "swap marked/unmarked pixels (pbm)");
    ppd->add_flag("--naive", naive, "build with the quadratic reference scan");
    ppd->add_option("--out", out, "output path (default: stdout)");
    ppd->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI::App* tpd = app.add_subcommand("tpd", "sweep the first m primes into a CSV of per-prime periodic counts");
    tpd->add_option("--n", n, "exponent (>= 2)")->required()->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    tpd->add_option("--primes", primes, "number of primes to sweep")->required()
        ->check(CLI::PositiveNumber);
    tpd->add_option("--out", out, "output path (default: stdout)");
    tpd->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI::App* graph = app.add_subcommand("graph", "export the functional graph of one system as DOT");
    graph->add_option("--n", n, "exponent (>= 2)")->required()->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    graph->add_option("--c", c, "additive parameter in [0, p)")->required();
    graph->add_option("--p", p, "prime modulus")->required();
    graph->add_option("--out", out, "output path (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the theorem checks over a prime range");
    verify->add_option("--suite", suite, "desert|fixed|symmetry|oracle|bounds|all")
        ->required();
    verify->add_option("--max-p", max_p, "largest prime to check")->required();
    verify->add_option("--n-min", n_min, "smallest exponent")->capture_default_str();
    verify->add_option("--n-max", n_max, "largest exponent")->capture_default_str();
    verify->add_option("--threads", threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (app.got_subcommand(ppd)) {
            ppdiag::RenderOptions opts;
            opts.format = format == "pbm" ? ppdiag::RenderOptions::Format::Pbm
                                          : ppdiag::RenderOptions::Format::Ascii;
            opts.out_path = out;
            opts.invert = invert;
            return run_ppd(n, p, opts, naive, threads);
        }
        if (app.got_subcommand(tpd)) return run_tpd(n, primes, out, threads);
        if (app.got_subcommand(graph)) return run_graph(n, c, p, out);
        if (app.got_subcommand(verify)) return run_verify(suite, max_p, n_min, n_max, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "ppdiag: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "ppdiag: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
