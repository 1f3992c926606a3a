#pragma once

// Serialization of diagrams and graphs: plain PBM (P1) and ASCII renders
// of a PpdGrid, CSV export of sweep records, and DOT export of the
// functional graph with periodic vertices shaded. All outputs are
// deterministic byte streams.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ppdiag/dynamics.hpp"
#include "ppdiag/ppd.hpp"
#include "ppdiag/tpd.hpp"

namespace ppdiag {

struct RenderOptions {
    enum class Format { Pbm, Ascii, Csv, Dot };

    Format format = Format::Ascii;
    std::string out_path;   // empty writes to standard output
    bool invert = false;    // marked cell = 0 instead of 1
};

// Plain PBM: "P1\n<w> <h>\n" then one row per line, bits separated by
// single spaces. Rows run top to bottom from x = p-1 down to x = 0, so
// the origin sits at the bottom-left like a plot.
std::string render_ppd_pbm(const PpdGrid& grid, bool invert = false);

// p lines of p characters, '#' marked and '.' unmarked, same orientation
// as the PBM render.
std::string render_ppd_ascii(const PpdGrid& grid);

// Inverse of render_ppd_pbm, back to (c, x) addressing; used to verify
// that renders round-trip bit-for-bit. Throws std::invalid_argument on
// malformed input.
BitGrid parse_ppd_pbm(std::string_view pbm, bool invert = false);

// Header "ordinal,p,n,d,per,lower,upper_paper,upper_corrected", then one
// row per record in sweep order; ordinals count from 1.
std::string export_tpd_csv(std::span<const TpdRecord> records);

// Directed graph of x -> x^n + c with one node and one edge statement per
// vertex; periodic vertices are filled like the shaded vertices of a
// hand-drawn orbit diagram.
std::string export_graph_dot(const SystemParams& params);

// Writes bytes to path, or to stdout when path is empty. I/O failures
// throw std::runtime_error naming the path.
void write_output(const std::string& path, std::string_view bytes);

} // namespace ppdiag
