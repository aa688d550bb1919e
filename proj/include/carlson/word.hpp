#pragma once

// Located words and located variable words: finite partial maps from
// positions to letters (plus the variable). They form a partial semigroup
// under union of separated operands; the empty map is kept as the unit.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carlson/error.hpp"

namespace carlson {

using Symbol = std::uint8_t;
using Position = std::uint32_t;
using Color = std::uint32_t;

/// The variable. Letters are stored by rank (declaration order), so every
/// letter symbol is < alphabet size.
inline constexpr Symbol kStar = 0xFF;

class Alphabet {
 public:
  explicit Alphabet(std::string letters, char star = '*');

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letters() const noexcept { return letters_; }
  char star() const noexcept { return star_; }

  bool contains(Symbol s) const noexcept { return s == kStar || s < letters_.size(); }
  char render(Symbol s) const;
  /// Rank of a letter character, kStar for the variable; UnknownSymbol otherwise.
  Symbol parse(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
  char star_;
};

struct Entry {
  Position pos;
  Symbol sym;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A finite map position -> symbol. Whether it is a located word, a located
/// variable word or the unit is a property of the value (see classify()).
class Word {
 public:
  Word() = default;

  /// Entries may come in any order; duplicate positions are rejected.
  static Word from_entries(std::vector<Entry> entries);
  static Word singleton(Position pos, Symbol sym) { return from_entries({{pos, sym}}); }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool has_star() const noexcept;
  std::size_t count(Symbol s) const noexcept;
  Position min_pos() const;
  Position max_pos() const;
  std::optional<Symbol> at(Position pos) const noexcept;
  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Same domain, every entry moved by `offset` positions.
  Word shifted(Position offset) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by position
};

enum class WordKind { Unit, Word, VariableWord };

WordKind classify(const Word& w, const Alphabet& alphabet);

/// p[x]: every star replaced by x. x == kStar returns p unchanged.
Word instantiate(const Word& p, Symbol x, const Alphabet& alphabet);

/// max dom p < min dom q.
bool precedes(const Word& p, const Word& q);

/// Union of separated operands (either order); the unit is neutral.
Word unite(const Word& p, const Word& q);

/// Total order used for every canonical listing: compares the highest
/// position where the words differ, with digit 0 for an absent position,
/// 1 for the star and 2 + rank for a letter. On star-free words it agrees
/// with canonical_index.
std::strong_ordering canonical_compare(const Word& a, const Word& b) noexcept;

struct CanonicalLess {
  bool operator()(const Word& a, const Word& b) const noexcept { return canonical_compare(a, b) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Mixed-radix index over FIN_A(0, window) plus the unit: position i
/// contributes digit 0 if absent, 1 + rank otherwise, in base k + 1.
std::uint64_t canonical_index(const Word& p, const Alphabet& alphabet, unsigned window);
Word word_from_index(std::uint64_t index, const Alphabet& alphabet, unsigned window);

/// (k + 1)^window, the table size of a coloring on that window.
std::uint64_t table_size(std::size_t letters, unsigned window);

/// Index of a word over letters and star in base k + 2 (star digit 1,
/// letter digit 2 + rank). Its order is canonical_compare.
std::uint64_t variable_index(const Word& p, const Alphabet& alphabet, unsigned window);

/// Visits every star-free word with lo <= dom < hi in canonical order. The
/// unit is visited first when include_unit is set. Returning false stops.
void for_each_word(const Alphabet& alphabet, Position lo, Position hi, bool include_unit,
                   const std::function<bool(const Word&)>& visit);

/// Visits every located variable word with lo <= dom < hi in canonical order.
void for_each_variable_word(const Alphabet& alphabet, Position lo, Position hi,
                            const std::function<bool(const Word&)>& visit);

std::string to_string(const Word& w, const Alphabet& alphabet);
/// Parses the `{0:a,2:*}` rendering.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Union arity bound: a positive bound or "all".
class Arity {
 public:
  static Arity all() noexcept { return Arity{}; }
  static Arity at_most(unsigned r);

  bool unbounded() const noexcept { return bound_ == 0; }
  unsigned bound() const noexcept { return bound_; }
  bool admits(std::size_t blocks) const noexcept { return unbounded() || blocks <= bound_; }

  friend bool operator==(const Arity&, const Arity&) = default;

 private:
  unsigned bound_ = 0;  // 0 encodes "all"
};

std::string to_string(Arity arity);
Arity parse_arity(std::string_view text);

/// Truncation parameters under which an infinite statement is checked.
struct Window {
  unsigned domain = 0;  // positions [0, domain)
  Arity arity = Arity::all();
  std::size_t budget = 0;
};

}  // namespace carlson
