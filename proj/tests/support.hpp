#pragma once

// Shared fixtures: converting between library words and oracle words, and a
// few named colorings.

#include <cstdint>
#include <random>
#include <vector>

#include "carlson/coloring.hpp"
#include "carlson/word.hpp"
#include "oracles/naive.hpp"

namespace fixture {

using namespace carlson;

inline naive::NWord to_naive(const Word& w) {
  naive::NWord out;
  for (auto e : w.entries()) out[e.pos] = e.sym == kStar ? naive::kVar : e.sym;
  return out;
}

inline Word from_naive(const naive::NWord& w) {
  std::vector<Entry> entries;
  for (auto [pos, s] : w) entries.push_back({pos, s == naive::kVar ? kStar : static_cast<Symbol>(s)});
  return Word::from_entries(std::move(entries));
}

inline std::vector<naive::NWord> to_naive(std::span<const Word> ws) {
  std::vector<naive::NWord> out;
  for (const auto& w : ws) out.push_back(to_naive(w));
  return out;
}

// A coloring defined on every word: a seeded hash of the entries.
inline naive::NColoring hashed(std::uint64_t seed, int colors) {
  return [seed, colors](const naive::NWord& w) {
    std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL;
    for (auto [pos, s] : w) {
      h ^= (static_cast<std::uint64_t>(pos) << 8) ^ static_cast<std::uint64_t>(s + 2);
      h *= 0xBF58476D1CE4E5B9ULL;
      h ^= h >> 31;
    }
    return static_cast<int>(h % static_cast<std::uint64_t>(colors));
  };
}

inline ColorFunction lift(const naive::NColoring& g) {
  return [g](const Word& w) { return static_cast<Color>(g(to_naive(w))); };
}

inline const Alphabet& ab() {
  static const Alphabet A("ab");
  return A;
}

inline Coloring parity(unsigned window) { return Coloring::from_rule(ab(), 2, window, Rule::domain_size_mod(2)); }
inline Coloring constant(unsigned window, Color c = 0) { return Coloring::from_rule(ab(), c + 1, window, Rule::constant(c)); }
inline Coloring letter_count(unsigned window) {
  return Coloring::from_rule(ab(), 2, window, Rule::letter_count_mod(0, 2));
}

inline Coloring random_table(std::mt19937_64& rng, unsigned colors, unsigned window) {
  return Coloring::tabulate(ab(), colors, window, [&](const Word&) { return static_cast<Color>(rng() % colors); });
}

inline Word w(std::string_view text) { return parse_word(text, ab()); }

}  // namespace fixture
