#include "ppdiag/ppd.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "parallel.hpp"

namespace ppdiag {

uint64_t BitGrid::count() const {
    uint64_t total = 0;
    for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
    return total;
}

PpdGrid build_ppd(uint64_t n, PrimeModulus p, unsigned threads) {
    const uint64_t P = p.value();
    BitGrid cells(P, P);
    detail::parallel_chunks(P, threads, [&](uint64_t begin, uint64_t end) {
        PeriodicScanner scanner(n, p);
        for (uint64_t c = begin; c < end; ++c) {
            const Bitset& members = scanner.scan(c);
            auto dst = cells.column_words(c);
            std::copy(members.words().begin(), members.words().end(), dst.begin());
        }
    });
    return PpdGrid(n, p, std::move(cells));
}

PpdGrid build_ppd_naive(uint64_t n, PrimeModulus p) {
    const uint64_t P = p.value();
    BitGrid cells(P, P);
    for (uint64_t c = 0; c < P; ++c) {
        const Bitset& members = periodic_points_naive(SystemParams(n, c, p)).members;
        auto dst = cells.column_words(c);
        std::copy(members.words().begin(), members.words().end(), dst.begin());
    }
    return PpdGrid(n, p, std::move(cells));
}

LineClass classify_line(uint64_t a, uint64_t n, PrimeModulus p) {
    a %= p.value();
    if (a == 0) return LineClass::zero_line();
    if (classify_power_residue(a, n, p) == ResidueClass::NonResidue)
        return LineClass::desert();
    return LineClass::residue_line(gcd(n, p.value() - 1));
}

std::vector<uint64_t> desert_offsets(uint64_t n, PrimeModulus p) {
    std::vector<uint64_t> offsets;
    for (uint64_t a = 1; a < p.value(); ++a)
        if (classify_power_residue(a, n, p) == ResidueClass::NonResidue)
            offsets.push_back(a);
    return offsets;
}

std::vector<uint64_t> empirical_desert_offsets(const PpdGrid& grid) {
    const uint64_t P = grid.p();
    std::vector<uint64_t> offsets;
    for (uint64_t a = 0; a < P; ++a) {
        bool marked = false;
        for (uint64_t i = 0; i < P && !marked; ++i) {
            uint64_t j = i + a;
            if (j >= P) j -= P;
            marked = grid.cell(i, j);
        }
        if (!marked) offsets.push_back(a);
    }
    return offsets;
}

uint64_t fixed_points_total(uint64_t n, PrimeModulus p) {
    const uint64_t P = p.value();
    std::vector<uint64_t> pow = power_table(n, p);
    uint64_t total = 0;
    for (uint64_t c = 0; c < P; ++c) {
        for (uint64_t x = 0; x < P; ++x) {
            uint64_t y = pow[x] + c;
            if (y >= P) y -= P;
            total += (y == x);
        }
    }
    return total;
}

BitGrid reduced_ppd(const PpdGrid& grid) {
    const uint64_t P = grid.p();
    BitGrid reduced(P - 1, P - 1);
    for (uint64_t i = 0; i + 1 < P; ++i)
        for (uint64_t j = 0; j + 1 < P; ++j)
            if (grid.cell(i + 1, j + 1)) reduced.set(i, j);
    return reduced;
}

bool check_odd_symmetry(const PpdGrid& grid) {
    if (grid.n() % 2 == 0)
        throw std::invalid_argument("check_odd_symmetry: exponent must be odd");
    const uint64_t P = grid.p();
    for (uint64_t c = 1; c < P; ++c)
        for (uint64_t x = 1; x < P; ++x)
            if (grid.cell(c, x) != grid.cell(P - c, P - x)) return false;
    return true;
}

bool check_odd_symmetry(uint64_t n, PrimeModulus p) {
    if (n % 2 == 0)
        throw std::invalid_argument("check_odd_symmetry: exponent must be odd");
    return check_odd_symmetry(build_ppd(n, p));
}

} // namespace ppdiag
