#pragma once

// Block sequences and the finite enumeration of their combinatorial spans:
// [X]_A, [X]_{A*}, arity-bounded spans, FS, FU and extracted words.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carlson/coloring.hpp"
#include "carlson/word.hpp"

namespace carlson {

/// Strictly increasing list of located variable words.
class BlockSequence {
 public:
  BlockSequence() = default;
  explicit BlockSequence(std::vector<Word> items);

  std::span<const Word> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Word& operator[](std::size_t i) const { return items_.at(i); }

  /// Blocks from index `from` on.
  BlockSequence tail(std::size_t from) const;
  /// Blocks whose domain starts past `pos` (X - F for F ending at pos).
  BlockSequence after(Position pos) const;
  void push_back(Word block);

  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;

 private:
  std::vector<Word> items_;
};

/// Strictly increasing list of star-free located words.
class WeakBlockSequence {
 public:
  WeakBlockSequence() = default;
  explicit WeakBlockSequence(std::vector<Word> items);

  std::span<const Word> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const Word& operator[](std::size_t i) const { return items_.at(i); }
  WeakBlockSequence tail(std::size_t from) const;

  friend bool operator==(const WeakBlockSequence&, const WeakBlockSequence&) = default;

 private:
  std::vector<Word> items_;
};

/// Finite set of naturals, sorted and duplicate-free.
using FinSet = std::vector<std::uint32_t>;

FinSet make_finset(std::vector<std::uint32_t> elements);
/// Order of finset_to_nat: compare the largest differing element.
bool finset_less(const FinSet& a, const FinSet& b) noexcept;

class FinSetSequence {
 public:
  FinSetSequence() = default;
  explicit FinSetSequence(std::vector<FinSet> items);

  std::span<const FinSet> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const FinSet& operator[](std::size_t i) const { return items_.at(i); }

  friend bool operator==(const FinSetSequence&, const FinSetSequence&) = default;

 private:
  std::vector<FinSet> items_;
};

/// Coloring of the finite subsets of [0, window), keyed by finset_to_nat
/// (index 0 is the empty set).
class SetColoring {
 public:
  static SetColoring from_table(unsigned colors, unsigned window, std::vector<Color> table);
  static SetColoring tabulate(unsigned colors, unsigned window, const std::function<Color(const FinSet&)>& fn);

  unsigned colors() const noexcept { return colors_; }
  unsigned window() const noexcept { return window_; }
  std::span<const Color> table() const noexcept { return table_; }

  Color operator()(const FinSet& e) const;
  std::uint64_t content_hash() const;

 private:
  SetColoring(unsigned colors, unsigned window) : colors_(colors), window_(window) {}

  unsigned colors_;
  unsigned window_;
  std::vector<Color> table_;
};

/// Classical variable words: strings over letters and the star character,
/// each containing the star.
class VariableWordList {
 public:
  VariableWordList(std::vector<std::string> items, const Alphabet& alphabet);

  std::span<const std::string> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const std::string& operator[](std::size_t i) const { return items_.at(i); }

 private:
  std::vector<std::string> items_;
};

/// The canonical all-star list: item n has length 2^n.
VariableWordList dyadic_word_list(std::size_t count, const Alphabet& alphabet);

enum class SpanMode {
  Letters,   // [X]_A
  WithStar,  // [X]_{A*}
};

/// Visits every union of at most `arity` instantiated blocks. In Letters mode
/// each chosen block is instantiated by a letter; in WithStar mode by a letter
/// or the star, with at least one star surviving. Visiting order is the
/// odometer over block digits, not canonical order. Returning false stops.
void for_each_span_element(std::span<const Word> blocks, SpanMode mode, Arity arity, const Alphabet& alphabet,
                           const std::function<bool(const Word&)>& visit);

/// Duplicate-free span sorted by canonical order.
std::vector<Word> span_located(const BlockSequence& x, SpanMode mode, Arity arity, const Alphabet& alphabet);

/// [X]^{<=r}_A for a weak block sequence: nonempty unions of at most r members.
std::vector<Word> weak_span(const WeakBlockSequence& x, Arity arity);

std::vector<std::uint64_t> finite_sums(std::span<const std::uint64_t> y, Arity arity);
std::vector<FinSet> finite_unions(const FinSetSequence& x, Arity arity);

std::vector<std::string> extracted_words(const VariableWordList& ws, std::size_t max_blocks, SpanMode mode,
                                         const Alphabet& alphabet);

/// The common color of `s`, or nullopt when two elements differ. An empty `s`
/// is an EmptySet error rather than "not homogeneous".
std::optional<Color> is_homogeneous(const ColorFunction& f, std::span<const Word> s);
std::optional<Color> is_homogeneous(const Coloring& f, std::span<const Word> s);
std::optional<Color> is_homogeneous(const SetColoring& g, std::span<const FinSet> s);

}  // namespace carlson
