#pragma once

// The Periodic Point Diagram: a p x p boolean grid marking, for each
// parameter c (horizontal axis) and point x (vertical axis), whether x is
// periodic under x -> x^n + c.  Diagonal lines j = i + a mod p are
// classified as desert (no periodic points, exactly the n-power
// non-residue offsets), residue lines (gcd(n, p-1) fixed points each), or
// the zero line (one fixed point).

#include <cstdint>
#include <span>
#include <vector>

#include "ppdiag/dynamics.hpp"
#include "ppdiag/numtheory.hpp"

namespace ppdiag {

// Bit matrix addressed (col, row), column-contiguous so independent
// column writers never share words.
class BitGrid {
public:
    BitGrid() = default;
    BitGrid(uint64_t cols, uint64_t rows)
        : cols_(cols), rows_(rows), stride_((rows + 63) / 64),
          words_(cols * stride_, 0) {}

    uint64_t cols() const { return cols_; }
    uint64_t rows() const { return rows_; }

    bool get(uint64_t col, uint64_t row) const {
        return (words_[col * stride_ + (row >> 6)] >> (row & 63)) & 1;
    }
    void set(uint64_t col, uint64_t row) {
        words_[col * stride_ + (row >> 6)] |= uint64_t{1} << (row & 63);
    }

    uint64_t count() const;
    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> column_words(uint64_t col) {
        return std::span<uint64_t>(words_).subspan(col * stride_, stride_);
    }

    friend bool operator==(const BitGrid&, const BitGrid&) = default;

private:
    uint64_t cols_ = 0;
    uint64_t rows_ = 0;
    uint64_t stride_ = 0;
    std::vector<uint64_t> words_;
};

// Built diagram for one (n, p): cell(c, x) is true iff x is periodic
// under h_c. Immutable after construction.
class PpdGrid {
public:
    uint64_t n() const { return n_; }
    PrimeModulus prime() const { return p_; }
    uint64_t p() const { return p_.value(); }

    bool cell(uint64_t c, uint64_t x) const { return cells_.get(c, x); }
    uint64_t count() const { return cells_.count(); }
    const BitGrid& cells() const { return cells_; }

    friend bool operator==(const PpdGrid&, const PpdGrid&) = default;

private:
    PpdGrid(uint64_t n, PrimeModulus p, BitGrid cells)
        : n_(n), p_(p), cells_(std::move(cells)) {}
    friend PpdGrid build_ppd(uint64_t n, PrimeModulus p, unsigned threads);
    friend PpdGrid build_ppd_naive(uint64_t n, PrimeModulus p);

    uint64_t n_;
    PrimeModulus p_;
    BitGrid cells_;
};

struct LineClass {
    enum class Kind { Desert, ResidueLine, ZeroLine };

    Kind kind;
    uint64_t fixed_count;   // 0 desert, gcd(n, p-1) residue line, 1 zero line

    static LineClass desert() { return {Kind::Desert, 0}; }
    static LineClass residue_line(uint64_t fixed) { return {Kind::ResidueLine, fixed}; }
    static LineClass zero_line() { return {Kind::ZeroLine, 1}; }

    friend bool operator==(const LineClass&, const LineClass&) = default;
};

// A diagonal of the diagram: the point set {(i, (i + a) mod p)}.
struct DiagonalLine {
    uint64_t offset;
    LineClass cls;
};

// Builds the full diagram with the fast detector; columns may be built in
// parallel (threads == 0 picks hardware concurrency) and the result is
// identical for every thread count.
PpdGrid build_ppd(uint64_t n, PrimeModulus p, unsigned threads = 0);

// Same diagram through the quadratic-time reference scan, kept callable
// in the shipped tool (ppd --naive) as the slow trusted route.
PpdGrid build_ppd_naive(uint64_t n, PrimeModulus p);

// ZeroLine for a == 0, Desert iff a is an n-power non-residue, otherwise
// ResidueLine carrying gcd(n, p-1) fixed points.
LineClass classify_line(uint64_t a, uint64_t n, PrimeModulus p);

// Offsets classified Desert, increasing; exactly
// p - 1 - (p-1)/gcd(n, p-1) of them.
std::vector<uint64_t> desert_offsets(uint64_t n, PrimeModulus p);

// Offsets whose diagonal holds no marked cell of the built grid; must
// equal desert_offsets(grid.n(), grid.prime()).
std::vector<uint64_t> empirical_desert_offsets(const PpdGrid& grid);

// Number of pairs (c, x) with h_c(x) == x; equals p.
uint64_t fixed_points_total(uint64_t n, PrimeModulus p);

// The grid with column c = 0 and row x = 0 removed: entry (i, j) of the
// result is cell (i+1, j+1) of the full grid.
BitGrid reduced_ppd(const PpdGrid& grid);

// For odd n the reduced diagram satisfies cell(c, x) == cell(p-c, p-x);
// a false return signals an implementation fault, not a property of n.
// Throws std::invalid_argument for even n.
bool check_odd_symmetry(const PpdGrid& grid);
bool check_odd_symmetry(uint64_t n, PrimeModulus p);

} // namespace ppdiag
