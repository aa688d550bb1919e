#pragma once

// Finite Hales-Jewett: least monochromatic combinatorial line of a coloring
// on a window, and exact HJ numbers by exhausting all colorings.

#include <cstdint>
#include <optional>
#include <vector>

#include "carlson/certificate.hpp"
#include "carlson/coloring.hpp"
#include "carlson/word.hpp"

namespace carlson {

/// Lines of FIN_A(0, N) in canonical order: the instantiation of line j by
/// the letter of rank a has table index fixed[j] + (1 + a) * step[j].
struct LineTable {
  std::size_t letters = 0;
  unsigned window = 0;
  std::vector<std::uint64_t> fixed;
  std::vector<std::uint64_t> step;

  std::size_t size() const noexcept { return fixed.size(); }
  Word line(std::size_t j) const;
};

LineTable line_table(std::size_t letters, unsigned window);

/// Least line of `table` (canonical order) that is monochromatic, or -1.
std::int64_t first_monochromatic_line(const LineTable& lines, const Color* table);

/// Least variable word p with dom p in [0, window) and [p]_A monochromatic.
std::optional<HJWitness> hj_witness(const Coloring& f);
/// Same search through for_each_variable_word and the coloring's call
/// operator; kept as the reference for the table kernel.
std::optional<HJWitness> hj_witness_serial(const Coloring& f);
/// Same search for an arbitrary coloring over positions [lo, hi).
std::optional<HJWitness> hj_witness(const ColorFunction& f, const Alphabet& alphabet, Position lo, Position hi);

struct HJNumberResult {
  std::optional<unsigned> value;  // nullopt: no window <= n_max suffices
  /// For every window below the value (or up to n_max), the least coloring
  /// index without a monochromatic line.
  std::vector<std::uint64_t> lineless_witnesses;
};

/// Colorings of FIN_A(0, N) are indexed in base c over the nonempty words in
/// canonical order; the unit always gets color 0.
std::vector<Color> coloring_from_index(std::uint64_t index, std::size_t letters, unsigned colors, unsigned window);
std::uint64_t coloring_count(std::size_t letters, unsigned colors, unsigned window);

HJNumberResult hj_number(std::size_t letters, unsigned colors, unsigned n_max);
HJNumberResult hj_number_serial(std::size_t letters, unsigned colors, unsigned n_max);

/// Number of colorings with index in [begin, end) that have no monochromatic line.
std::uint64_t count_lineless(std::size_t letters, unsigned colors, unsigned window, std::uint64_t begin, std::uint64_t end);
std::uint64_t count_lineless_serial(std::size_t letters, unsigned colors, unsigned window, std::uint64_t begin,
                                    std::uint64_t end);

}  // namespace carlson
