#include "ppdiag/render.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace ppdiag {

std::string render_ppd_pbm(const PpdGrid& grid, bool invert) {
    const uint64_t p = grid.p();
    std::string out = "P1\n" + std::to_string(p) + " " + std::to_string(p) + "\n";
    out.reserve(out.size() + p * (2 * p));
    const char mark = invert ? '0' : '1';
    const char blank = invert ? '1' : '0';
    for (uint64_t row = 0; row < p; ++row) {
        const uint64_t x = p - 1 - row;
        for (uint64_t c = 0; c < p; ++c) {
            if (c != 0) out.push_back(' ');
            out.push_back(grid.cell(c, x) ? mark : blank);
        }
        out.push_back('\n');
    }
    return out;
}

std::string render_ppd_ascii(const PpdGrid& grid) {
    const uint64_t p = grid.p();
    std::string out;
    out.reserve(p * (p + 1));
    for (uint64_t row = 0; row < p; ++row) {
        const uint64_t x = p - 1 - row;
        for (uint64_t c = 0; c < p; ++c)
            out.push_back(grid.cell(c, x) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

namespace {

[[noreturn]] void bad_pbm(const std::string& what) {
    throw std::invalid_argument("parse_ppd_pbm: " + what);
}

// Next token, skipping PBM whitespace and '#' comments.
std::string_view next_token(std::string_view text, size_t& pos) {
    while (pos < text.size()) {
        char ch = text[pos];
        if (ch == '#') {
            while (pos < text.size() && text[pos] != '\n') ++pos;
        } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\r' && text[pos] != '\n' && text[pos] != '#')
        ++pos;
    return text.substr(start, pos - start);
}

uint64_t parse_u64(std::string_view token) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        bad_pbm("expected a number, got '" + std::string(token) + "'");
    return value;
}

} // namespace

BitGrid parse_ppd_pbm(std::string_view pbm, bool invert) {
    size_t pos = 0;
    if (next_token(pbm, pos) != "P1") bad_pbm("missing P1 magic");
    const uint64_t width = parse_u64(next_token(pbm, pos));
    const uint64_t height = parse_u64(next_token(pbm, pos));
    if (width != height) bad_pbm("diagram must be square");

    BitGrid grid(width, height);
    const char mark = invert ? '0' : '1';
    for (uint64_t row = 0; row < height; ++row) {
        const uint64_t x = height - 1 - row;
        for (uint64_t c = 0; c < width; ++c) {
            std::string_view bit = next_token(pbm, pos);
            if (bit != "0" && bit != "1") bad_pbm("expected a 0/1 bit");
            if (bit[0] == mark) grid.set(c, x);
        }
    }
    if (!next_token(pbm, pos).empty()) bad_pbm("trailing data after pixels");
    return grid;
}

std::string export_tpd_csv(std::span<const TpdRecord> records) {
    std::string out = "ordinal,p,n,d,per,lower,upper_paper,upper_corrected\n";
    uint64_t ordinal = 1;
    for (const TpdRecord& r : records) {
        char row[160];
        std::snprintf(row, sizeof(row),
                      "%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu\n",
                      static_cast<unsigned long long>(ordinal++),
                      static_cast<unsigned long long>(r.p),
                      static_cast<unsigned long long>(r.n),
                      static_cast<unsigned long long>(r.d),
                      static_cast<unsigned long long>(r.per),
                      static_cast<unsigned long long>(r.lower),
                      static_cast<unsigned long long>(r.upper_paper),
                      static_cast<unsigned long long>(r.upper_corrected));
        out += row;
    }
    return out;
}

std::string export_graph_dot(const SystemParams& params) {
    const uint64_t p = params.p.value();
    const Bitset periodic = periodic_points(params).members;

    std::string out = "digraph functional_graph {\n";
    out += "  label=\"x^" + std::to_string(params.n) + " + " +
           std::to_string(params.c) + " mod " + std::to_string(p) + "\";\n";
    out += "  node [shape=circle];\n";
    for (uint64_t v = 0; v < p; ++v) {
        out += "  " + std::to_string(v);
        if (periodic.test(v)) out += " [style=filled, fillcolor=lightgray]";
        out += ";\n";
    }
    for (auto [src, dst] : functional_graph(params))
        out += "  " + std::to_string(src) + " -> " + std::to_string(dst) + ";\n";
    out += "}\n";
    return out;
}

void write_output(const std::string& path, std::string_view bytes) {
    if (path.empty()) {
        std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("cannot write to standard output");
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    file.flush();
    if (!file) throw std::runtime_error("error writing '" + path + "'");
}

} // namespace ppdiag
