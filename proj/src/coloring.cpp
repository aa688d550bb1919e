#include "carlson/coloring.hpp"

#include <charconv>
#include <cstdio>
#include <numeric>

namespace carlson {

Color Rule::evaluate(const Word& w) const {
  if (w.has_star()) throw Error(Errc::InvalidArgument, "colorings apply to star-free words");
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::DomainSizeMod:
      return static_cast<Color>((w.size() + offset) % modulus);
    case Kind::LetterCountMod:
      return static_cast<Color>((w.count(letter) + offset) % modulus);
    case Kind::ContainsLetter:
      return w.count(letter) != 0 ? 1u : 0u;
    case Kind::PositionSumMod: {
      std::uint64_t sum = offset;
      for (const auto& e : w.entries()) sum += e.pos;
      return static_cast<Color>(sum % modulus);
    }
  }
  return 0;
}

unsigned Rule::color_bound() const {
  switch (kind) {
    case Kind::Constant: return value + 1;
    case Kind::ContainsLetter: return 2;
    default: return modulus;
  }
}

std::string to_string(const Rule& rule, const Alphabet& alphabet) {
  auto tail = [&](unsigned offset) { return offset == 0 ? std::string{} : ":" + std::to_string(offset); };
  switch (rule.kind) {
    case Rule::Kind::Constant: return "constant:" + std::to_string(rule.value);
    case Rule::Kind::DomainSizeMod: return "dom-mod:" + std::to_string(rule.modulus) + tail(rule.offset);
    case Rule::Kind::LetterCountMod:
      return std::string("letter-count-mod:") + alphabet.render(rule.letter) + ":" + std::to_string(rule.modulus) +
             tail(rule.offset);
    case Rule::Kind::ContainsLetter: return std::string("contains:") + alphabet.render(rule.letter);
    case Rule::Kind::PositionSumMod: return "position-sum-mod:" + std::to_string(rule.modulus) + tail(rule.offset);
  }
  return {};
}

Rule parse_rule(std::string_view text, const Alphabet& alphabet) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto fail = [&] { return Error(Errc::ParseError, "rule '" + std::string(text) + "'"); };
  auto number = [&](std::size_t i) {
    if (i >= parts.size()) throw fail();
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), v);
    if (ec != std::errc{} || ptr != parts[i].data() + parts[i].size()) throw fail();
    return v;
  };
  auto optional_number = [&](std::size_t i) { return i < parts.size() ? number(i) : 0u; };
  auto letter = [&](std::size_t i) {
    if (i >= parts.size() || parts[i].size() != 1) throw fail();
    Symbol s = alphabet.parse(parts[i][0]);
    if (s == kStar) throw fail();
    return s;
  };
  const auto& name = parts[0];
  Rule rule;
  if (name == "constant" && parts.size() == 2) {
    rule = Rule::constant(number(1));
  } else if (name == "dom-mod" && parts.size() <= 3) {
    rule = Rule::domain_size_mod(number(1), optional_number(2));
  } else if (name == "letter-count-mod" && parts.size() <= 4) {
    rule = Rule::letter_count_mod(letter(1), number(2), optional_number(3));
  } else if (name == "contains" && parts.size() == 2) {
    rule = Rule::contains_letter(letter(1));
  } else if (name == "position-sum-mod" && parts.size() <= 3) {
    rule = Rule::position_sum_mod(number(1), optional_number(2));
  } else {
    throw fail();
  }
  if (rule.modulus == 0) throw fail();
  return rule;
}

Coloring Coloring::from_table(Alphabet alphabet, unsigned colors, unsigned window, std::vector<Color> table) {
  if (colors == 0) throw Error(Errc::InvalidArgument, "color set must be nonempty");
  Coloring f(std::move(alphabet), colors, window);
  auto expected = table_size(f.alphabet_.size(), window);
  if (table.size() != expected)
    throw Error(Errc::InvalidArgument,
                "table has " + std::to_string(table.size()) + " entries, expected " + std::to_string(expected));
  for (auto c : table)
    if (c >= colors) throw Error(Errc::InvalidArgument, "color index " + std::to_string(c) + " >= " + std::to_string(colors));
  f.table_ = std::move(table);
  return f;
}

Coloring Coloring::from_rule(Alphabet alphabet, unsigned colors, unsigned window, Rule rule) {
  if (rule.color_bound() > colors)
    throw Error(Errc::InvalidArgument, "rule produces colors beyond " + std::to_string(colors));
  Coloring f = tabulate(std::move(alphabet), colors, window, [&](const Word& w) { return rule.evaluate(w); });
  f.rule_ = rule;
  return f;
}

Coloring Coloring::tabulate(Alphabet alphabet, unsigned colors, unsigned window,
                            const std::function<Color(const Word&)>& fn) {
  std::vector<Color> table;
  table.reserve(table_size(alphabet.size(), window));
  for_each_word(alphabet, 0, window, true, [&](const Word& w) {
    table.push_back(fn(w));
    return true;
  });
  return from_table(std::move(alphabet), colors, window, std::move(table));
}

bool Coloring::covers(const Word& w) const noexcept {
  return rule_.has_value() || w.empty() || w.max_pos() < window_;
}

Color Coloring::operator()(const Word& w) const {
  if (rule_) return rule_->evaluate(w);
  if (!w.empty() && w.max_pos() >= window_)
    throw Error(Errc::WindowOverflow, "position " + std::to_string(w.max_pos()) + " past window " + std::to_string(window_));
  return table_[canonical_index(w, alphabet_, window_)];
}

std::uint64_t Coloring::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t byte) { h = (h ^ (byte & 0xFF)) * 1099511628211ull; };
  auto mix_word = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) mix(v >> (8 * i));
  };
  for (char c : alphabet_.letters()) mix(static_cast<unsigned char>(c));
  mix(0);
  mix_word(colors_);
  mix_word(window_);
  for (auto c : table_) mix_word(c);
  if (rule_)
    for (char c : to_string(*rule_, alphabet_)) mix(static_cast<unsigned char>(c));
  return h;
}

std::string hash_string(std::uint64_t hash) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace carlson
