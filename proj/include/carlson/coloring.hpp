#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carlson/word.hpp"

namespace carlson {

/// Named symbolic colorings. They evaluate at any position, which is what
/// lets recurrence and proximality checks run past a table's window.
struct Rule {
  enum class Kind {
    Constant,        // color = value
    DomainSizeMod,   // (|dom| + offset) mod modulus
    LetterCountMod,  // (#letter + offset) mod modulus
    ContainsLetter,  // 1 iff letter occurs
    PositionSumMod,  // (sum of positions + offset) mod modulus
  };

  Kind kind = Kind::Constant;
  unsigned value = 0;
  unsigned modulus = 1;
  unsigned offset = 0;
  Symbol letter = 0;

  static Rule constant(unsigned color) { return {Kind::Constant, color, 1, 0, 0}; }
  static Rule domain_size_mod(unsigned modulus, unsigned offset = 0) {
    return {Kind::DomainSizeMod, 0, modulus, offset, 0};
  }
  static Rule letter_count_mod(Symbol letter, unsigned modulus, unsigned offset = 0) {
    return {Kind::LetterCountMod, 0, modulus, offset, letter};
  }
  static Rule contains_letter(Symbol letter) { return {Kind::ContainsLetter, 0, 2, 0, letter}; }
  static Rule position_sum_mod(unsigned modulus, unsigned offset = 0) {
    return {Kind::PositionSumMod, 0, modulus, offset, 0};
  }

  Color evaluate(const Word& w) const;
  /// Largest color the rule can produce, plus one.
  unsigned color_bound() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Text id such as "dom-mod:2", "letter-count-mod:a:2:1", "constant:0".
std::string to_string(const Rule& rule, const Alphabet& alphabet);
Rule parse_rule(std::string_view text, const Alphabet& alphabet);

/// A total map from FIN_A(0, window) plus the unit to colors, stored as a
/// table in canonical_index order. A symbolic rule, when present, agrees with
/// the table and extends it to every position.
class Coloring {
 public:
  static Coloring from_table(Alphabet alphabet, unsigned colors, unsigned window, std::vector<Color> table);
  static Coloring from_rule(Alphabet alphabet, unsigned colors, unsigned window, Rule rule);
  static Coloring tabulate(Alphabet alphabet, unsigned colors, unsigned window,
                           const std::function<Color(const Word&)>& fn);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  unsigned colors() const noexcept { return colors_; }
  unsigned window() const noexcept { return window_; }
  std::span<const Color> table() const noexcept { return table_; }
  const std::optional<Rule>& rule() const noexcept { return rule_; }

  /// True when the word can be colored: a rule exists or dom < window.
  bool covers(const Word& w) const noexcept;

  /// Color of a star-free word; WindowOverflow past the table of a
  /// table-only coloring.
  Color operator()(const Word& w) const;
  Color at_index(std::uint64_t index) const { return table_[index]; }

  /// Stable 64-bit FNV-1a digest over alphabet, color count, window, table
  /// and rule id.
  std::uint64_t content_hash() const;

 private:
  Coloring(Alphabet alphabet, unsigned colors, unsigned window)
      : alphabet_(std::move(alphabet)), colors_(colors), window_(window) {}

  Alphabet alphabet_;
  unsigned colors_;
  unsigned window_;
  std::vector<Color> table_;
  std::optional<Rule> rule_;
};

using ColorFunction = std::function<Color(const Word&)>;

/// Non-owning function view; the coloring must outlive it.
inline ColorFunction view(const Coloring& f) {
  return [&f](const Word& w) { return f(w); };
}

std::string hash_string(std::uint64_t hash);

}  // namespace carlson
