#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "ppdiag/render.hpp"
#include "ppdiag/verify.hpp"

using namespace ppdiag;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("pbm header and shape") {
    PpdGrid grid = build_ppd(2, PrimeModulus(7));
    std::string pbm = render_ppd_pbm(grid);
    CHECK(pbm.starts_with("P1\n7 7\n"));
    auto lines = split_lines(pbm);
    REQUIRE(lines.size() == 2 + 7);
    for (size_t i = 2; i < lines.size(); ++i) CHECK(lines[i].size() == 13);
}

TEST_CASE("filled diagram renders as all ones") {
    std::string pbm = render_ppd_pbm(build_ppd(3, PrimeModulus(5)));
    std::string pixels = pbm.substr(pbm.find('\n', pbm.find("5 5")) + 1);
    size_t ones = 0;
    for (char ch : pixels) ones += (ch == '1');
    CHECK(ones == 25);
    size_t zeros = 0;
    for (char ch : pixels) zeros += (ch == '0');
    CHECK(zeros == 0);
}

TEST_CASE("desert diagonals are all zeros in the render") {
    PpdGrid grid = build_ppd(2, PrimeModulus(7));
    BitGrid parsed = parse_ppd_pbm(render_ppd_pbm(grid));
    for (uint64_t a : {3, 5, 6}) {
        for (uint64_t i = 0; i < 7; ++i) CHECK_FALSE(parsed.get(i, (i + a) % 7));
    }
}

TEST_CASE("pbm renders round-trip bit for bit") {
    for (uint64_t n : {2, 3, 5}) {
        for (uint64_t pv : {2, 5, 13, 31}) {
            PpdGrid grid = build_ppd(n, PrimeModulus(pv));
            CHECK(parse_ppd_pbm(render_ppd_pbm(grid)) == grid.cells());
            CHECK(parse_ppd_pbm(render_ppd_pbm(grid, true), true) == grid.cells());
        }
    }
}

TEST_CASE("pbm parser rejects malformed input") {
    CHECK_THROWS_AS(parse_ppd_pbm("P4\n2 2\n0 0\n0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ppd_pbm("P1\n2 2\n0 0\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ppd_pbm("P1\n2 2\n0 0\n0 2\n"), std::invalid_argument);
}

TEST_CASE("ascii render") {
    auto filled = split_lines(render_ppd_ascii(build_ppd(3, PrimeModulus(5))));
    REQUIRE(filled.size() == 5);
    for (const auto& line : filled) CHECK(line == "#####");

    std::string art = render_ppd_ascii(build_ppd(2, PrimeModulus(7)));
    CHECK(art.back() == '\n');
    auto lines = split_lines(art);
    REQUIRE(lines.size() == 7);
    // bottom line is x = 0: periodic for c in {0, 3, 6}
    CHECK(lines.back() == "#..#..#");

    auto tiny = split_lines(render_ppd_ascii(build_ppd(2, PrimeModulus(2))));
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0] == "##");
    CHECK(tiny[1] == "##");
}

TEST_CASE("csv export") {
    auto records = tpd_sweep(2, 4);
    std::string csv = export_tpd_csv(records);
    auto lines = split_lines(csv);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "ordinal,p,n,d,per,lower,upper_paper,upper_corrected");
    CHECK(lines[4] == "4,7,2,2,16,7,21,28");

    auto records12 = tpd_sweep(12, 6);
    auto lines12 = split_lines(export_tpd_csv(records12));
    CHECK(lines12[6] == "6,13,12,12,15,13,13,26");

    CHECK(export_tpd_csv({}) == "ordinal,p,n,d,per,lower,upper_paper,upper_corrected\n");
}

TEST_CASE("csv fields parse back to the records") {
    auto records = tpd_sweep(5, 12);
    auto lines = split_lines(export_tpd_csv(records));
    REQUIRE(lines.size() == records.size() + 1);
    for (size_t i = 0; i < records.size(); ++i) {
        std::istringstream row(lines[i + 1]);
        std::string field;
        std::vector<uint64_t> fields;
        while (std::getline(row, field, ',')) fields.push_back(std::stoull(field));
        REQUIRE(fields.size() == 8);
        CHECK(fields[0] == i + 1);
        CHECK(fields[1] == records[i].p);
        CHECK(fields[2] == records[i].n);
        CHECK(fields[3] == records[i].d);
        CHECK(fields[4] == records[i].per);
        CHECK(fields[5] == records[i].lower);
        CHECK(fields[6] == records[i].upper_paper);
        CHECK(fields[7] == records[i].upper_corrected);
    }
}

TEST_CASE("dot export") {
    std::string dot = export_graph_dot(SystemParams(2, 2, PrimeModulus(7)));
    auto lines = split_lines(dot);

    size_t node_statements = 0;
    size_t edge_statements = 0;
    std::set<std::string> shaded;
    for (const auto& line : lines) {
        if (line.find("->") != std::string::npos) {
            ++edge_statements;
        } else if (line.size() > 2 && line.ends_with(";") &&
                   line.find("node [") == std::string::npos &&
                   line.find("label=") == std::string::npos) {
            ++node_statements;
            if (line.find("filled") != std::string::npos)
                shaded.insert(line.substr(2, line.find(' ', 2) - 2));
        }
    }
    CHECK(node_statements == 7);
    CHECK(edge_statements == 7);
    CHECK(shaded == std::set<std::string>{"4"});

    std::string dot3 = export_graph_dot(SystemParams(2, 3, PrimeModulus(7)));
    for (const char* node : {"  0 [", "  3 [", "  5 ["})
        CHECK(dot3.find(node) != std::string::npos);

    std::string loops = export_graph_dot(SystemParams(2, 0, PrimeModulus(2)));
    CHECK(loops.find("0 -> 0;") != std::string::npos);
    CHECK(loops.find("1 -> 1;") != std::string::npos);
    CHECK(loops.find("0 [style=filled") != std::string::npos);
    CHECK(loops.find("1 [style=filled") != std::string::npos);
}

TEST_CASE("write_output reports the failing path") {
    CHECK_THROWS_WITH_AS(write_output("/nonexistent-dir/out.pbm", "data"),
                         doctest::Contains("/nonexistent-dir/out.pbm"),
                         std::runtime_error);
}

TEST_CASE("verify suites pass at small scale") {
    for (Suite suite : {Suite::Desert, Suite::Fixed, Suite::Symmetry, Suite::Bounds}) {
        VerifyReport report = verify_suite(suite, 50, 2, 13);
        CAPTURE(suite_name(suite));
        CHECK(report.ok());
        REQUIRE(report.suites.size() == 1);
        CHECK(report.suites[0].checks > 0);
        CHECK(report.suites[0].passes == report.suites[0].checks);
    }

    VerifyReport oracle = verify_suite(Suite::Oracle, 31, 2, 7);
    CHECK(oracle.ok());

    VerifyReport all = verify_suite(Suite::All, 20, 2, 5);
    CHECK(all.ok());
    CHECK(all.suites.size() == 5);
}

TEST_CASE("bounds suite warns about the printed bound at n=12, p=13") {
    VerifyReport report = verify_suite(Suite::Bounds, 50, 12, 12);
    CHECK(report.ok());   // warnings are not failures
    REQUIRE(report.suites.size() == 1);
    const SuiteReport& suite = report.suites[0];
    CHECK(suite.failures.empty());
    bool warned = false;
    for (const VerifyIssue& w : suite.warnings)
        if (w.p == 13 && w.n == 12) warned = true;
    CHECK(warned);
}

TEST_CASE("suite names parse") {
    CHECK(parse_suite("desert") == Suite::Desert);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_THROWS_AS(parse_suite("unknown"), std::invalid_argument);
    CHECK_THROWS_AS(verify_suite(Suite::Desert, 1), std::invalid_argument);
}

TEST_CASE("report printing mentions warnings") {
    VerifyReport report = verify_suite(Suite::Bounds, 14, 12, 12);
    std::ostringstream out;
    print_report(report, out);
    CHECK(out.str().find("WARN") != std::string::npos);
    CHECK(out.str().find("verification passed") != std::string::npos);
}
