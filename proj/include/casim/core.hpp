#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace casim {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

/// Radius-r block map on an alphabet {0,...,k-1}.
///
/// The table is indexed with the leftmost neighborhood symbol most
/// significant, base k: neighborhood (a_{-r},...,a_r) maps to
/// sum a_j * k^(r-j). For k=2, r=1 this matches the Wolfram ECA numbering.
class LocalRule {
public:
    LocalRule(int alphabet_size, int radius, Word table);

    int alphabet_size() const { return k_; }
    int radius() const { return r_; }
    const Word& table() const { return table_; }
    std::size_t neighborhood_size() const { return 2 * static_cast<std::size_t>(r_) + 1; }

    /// Applies the block map to one neighborhood of length 2r+1.
    Symbol apply(const Word& neighborhood) const;

    /// Table index of a neighborhood (no validation).
    std::size_t index_of(const Symbol* neighborhood) const;

    bool operator==(const LocalRule& o) const = default;

private:
    int k_;
    int r_;
    Word table_;
};

/// A finite restriction x(a, a+len-1) of a configuration, with its absolute
/// left coordinate. Evolution shrinks the window by r on each side; no
/// boundary condition is ever assumed.
struct WindowConfig {
    std::int64_t offset = 0;
    Word cells;

    std::int64_t left() const { return offset; }
    std::int64_t right() const { return offset + static_cast<std::int64_t>(cells.size()) - 1; }

    /// Cell at absolute coordinate i; i must lie in [left, right].
    Symbol at(std::int64_t i) const { return cells[static_cast<std::size_t>(i - offset)]; }

    bool covers(std::int64_t a, std::int64_t b) const { return left() <= a && b <= right(); }

    bool operator==(const WindowConfig& o) const = default;
};

/// Configuration on the circle Z/LZ; equivalently the spatially periodic
/// configuration ...www... of period L.
struct TorusConfig {
    Word cells;

    std::size_t size() const { return cells.size(); }

    bool operator==(const TorusConfig& o) const = default;
};

/// One exact evolution step on a window. Output covers [left+r, right-r].
/// Throws if the window is too short to produce any output cell.
WindowConfig step_lightcone(const LocalRule& rule, const WindowConfig& w);

/// The words F^i(x)(-n, n) for i = 0..T. Requires w to cover
/// [-n - r*T, n + r*T].
std::vector<Word> evolve_column(const LocalRule& rule, const WindowConfig& w, int n, int T);

/// One step on the circle Z/LZ.
TorusConfig step_torus(const LocalRule& rule, const TorusConfig& t);

/// In-place step over a raw buffer: replaces cells[0..len-2r-1] with the
/// image row (absolute offset advances by r). Returns the new length.
/// Allocation-free; the hot path for Monte Carlo loops.
std::size_t step_inplace(const LocalRule& rule, Symbol* cells, std::size_t len);

/// Validates cells of a word against an alphabet size; throws on violation.
void check_symbols(const Word& cells, int alphabet_size);

}  // namespace casim
