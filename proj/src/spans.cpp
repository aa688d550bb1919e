#include "carlson/spans.hpp"

#include <algorithm>
#include <set>

namespace carlson {

namespace {

void require_increasing(std::span<const Word> items, const char* what) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].empty()) throw Error(Errc::InvalidArgument, std::string(what) + " contains the unit");
    if (i > 0 && !precedes(items[i - 1], items[i]))
      throw Error(Errc::NotSeparated, std::string(what) + " is not strictly increasing at item " + std::to_string(i));
  }
}

}  // namespace

BlockSequence::BlockSequence(std::vector<Word> items) : items_(std::move(items)) {
  require_increasing(items_, "block sequence");
  for (const auto& w : items_)
    if (!w.has_star()) throw Error(Errc::InvalidArgument, "block sequence item without a star");
}

BlockSequence BlockSequence::tail(std::size_t from) const {
  BlockSequence out;
  if (from < items_.size()) out.items_.assign(items_.begin() + static_cast<std::ptrdiff_t>(from), items_.end());
  return out;
}

BlockSequence BlockSequence::after(Position pos) const {
  BlockSequence out;
  for (const auto& w : items_)
    if (w.min_pos() > pos) out.items_.push_back(w);
  return out;
}

void BlockSequence::push_back(Word block) {
  if (!block.has_star()) throw Error(Errc::InvalidArgument, "block sequence item without a star");
  if (!items_.empty() && !precedes(items_.back(), block))
    throw Error(Errc::NotSeparated, "appended block does not follow the sequence");
  items_.push_back(std::move(block));
}

WeakBlockSequence::WeakBlockSequence(std::vector<Word> items) : items_(std::move(items)) {
  require_increasing(items_, "weak block sequence");
  for (const auto& w : items_)
    if (w.has_star()) throw Error(Errc::InvalidArgument, "weak block sequence item with a star");
}

WeakBlockSequence WeakBlockSequence::tail(std::size_t from) const {
  WeakBlockSequence out;
  if (from < items_.size()) out.items_.assign(items_.begin() + static_cast<std::ptrdiff_t>(from), items_.end());
  return out;
}

FinSet make_finset(std::vector<std::uint32_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

bool finset_less(const FinSet& a, const FinSet& b) noexcept {
  auto ia = a.size();
  auto ib = b.size();
  while (ia > 0 && ib > 0) {
    if (a[ia - 1] != b[ib - 1]) return a[ia - 1] < b[ib - 1];
    --ia;
    --ib;
  }
  return ia < ib;
}

FinSetSequence::FinSetSequence(std::vector<FinSet> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& s = items_[i];
    if (s.empty()) throw Error(Errc::InvalidArgument, "empty set in a block sequence of finite sets");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(Errc::InvalidArgument, "finite set must be sorted and duplicate-free");
    if (i > 0 && items_[i - 1].back() >= s.front())
      throw Error(Errc::NotSeparated, "finite sets are not strictly increasing at item " + std::to_string(i));
  }
}

SetColoring SetColoring::from_table(unsigned colors, unsigned window, std::vector<Color> table) {
  if (colors == 0) throw Error(Errc::InvalidArgument, "color set must be nonempty");
  if (window >= 32) throw Error(Errc::Overflow, "set coloring window too large");
  if (table.size() != (std::size_t{1} << window))
    throw Error(Errc::InvalidArgument, "set coloring table has " + std::to_string(table.size()) + " entries, expected " +
                                           std::to_string(std::size_t{1} << window));
  for (auto c : table)
    if (c >= colors) throw Error(Errc::InvalidArgument, "color index " + std::to_string(c) + " >= " + std::to_string(colors));
  SetColoring g(colors, window);
  g.table_ = std::move(table);
  return g;
}

SetColoring SetColoring::tabulate(unsigned colors, unsigned window, const std::function<Color(const FinSet&)>& fn) {
  if (window >= 32) throw Error(Errc::Overflow, "set coloring window too large");
  std::vector<Color> table(std::size_t{1} << window);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    FinSet e;
    for (std::uint32_t i = 0; i < window; ++i)
      if (mask >> i & 1) e.push_back(i);
    table[mask] = fn(e);
  }
  return from_table(colors, window, std::move(table));
}

Color SetColoring::operator()(const FinSet& e) const {
  std::size_t index = 0;
  for (auto i : e) {
    if (i >= window_) throw Error(Errc::WindowOverflow, "element " + std::to_string(i) + " past set window " + std::to_string(window_));
    index |= std::size_t{1} << i;
  }
  return table_[index];
}

std::uint64_t SetColoring::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix_word = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) h = (h ^ ((v >> (8 * i)) & 0xFF)) * 1099511628211ull;
  };
  mix_word(0x5e7);  // distinguishes set tables from word tables
  mix_word(colors_);
  mix_word(window_);
  for (auto c : table_) mix_word(c);
  return h;
}

VariableWordList::VariableWordList(std::vector<std::string> items, const Alphabet& alphabet)
    : items_(std::move(items)) {
  for (const auto& w : items_) {
    for (char c : w) alphabet.parse(c);
    if (w.find(alphabet.star()) == std::string::npos)
      throw Error(Errc::InvalidArgument, "variable word '" + w + "' has no star");
  }
}

VariableWordList dyadic_word_list(std::size_t count, const Alphabet& alphabet) {
  if (count >= 32) throw Error(Errc::Overflow, "dyadic word list too long");
  std::vector<std::string> items;
  for (std::size_t n = 0; n < count; ++n) items.emplace_back(std::size_t{1} << n, alphabet.star());
  return VariableWordList(std::move(items), alphabet);
}

void for_each_span_element(std::span<const Word> blocks, SpanMode mode, Arity arity, const Alphabet& alphabet,
                           const std::function<bool(const Word&)>& visit) {
  // Digit per block: 0 absent, 1..k the letter of rank digit-1, k+1 the star.
  const unsigned k = static_cast<unsigned>(alphabet.size());
  const unsigned radix = mode == SpanMode::WithStar ? k + 2 : k + 1;
  std::vector<unsigned> digits(blocks.size(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == radix) digits[i++] = 0;
    if (i == digits.size()) return;

    std::size_t used = 0;
    bool star = false;
    for (auto d : digits) {
      used += d != 0;
      star = star || d == k + 1;
    }
    if (!arity.admits(used)) continue;
    if (mode == SpanMode::WithStar && !star) continue;

    std::vector<Entry> entries;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (digits[b] == 0) continue;
      Symbol x = digits[b] == k + 1 ? kStar : static_cast<Symbol>(digits[b] - 1);
      for (const auto& e : blocks[b].entries()) entries.push_back({e.pos, e.sym == kStar ? x : e.sym});
    }
    if (!visit(Word::from_entries(std::move(entries)))) return;
  }
}

std::vector<Word> span_located(const BlockSequence& x, SpanMode mode, Arity arity, const Alphabet& alphabet) {
  std::vector<Word> out;
  for_each_span_element(x.items(), mode, arity, alphabet, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> weak_span(const WeakBlockSequence& x, Arity arity) {
  std::vector<Word> out;
  const auto n = x.size();
  // Subsets by binary counting, lowest member first.
  for (std::uint64_t mask = 1; n < 64 && mask < (std::uint64_t{1} << n); ++mask) {
    if (!arity.admits(static_cast<std::size_t>(__builtin_popcountll(mask)))) continue;
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) w = unite(w, x[i]);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<std::uint64_t> finite_sums(std::span<const std::uint64_t> y, Arity arity) {
  if (y.size() >= 63) throw Error(Errc::Overflow, "too many summands to enumerate");
  std::set<std::uint64_t> sums;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << y.size()); ++mask) {
    if (!arity.admits(static_cast<std::size_t>(__builtin_popcountll(mask)))) continue;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (mask >> i & 1) {
        if (__builtin_add_overflow(s, y[i], &s)) throw Error(Errc::Overflow, "finite sum overflows 64 bits");
      }
    sums.insert(s);
  }
  return {sums.begin(), sums.end()};
}

std::vector<FinSet> finite_unions(const FinSetSequence& x, Arity arity) {
  if (x.size() >= 63) throw Error(Errc::Overflow, "too many blocks to enumerate");
  std::vector<FinSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
    if (!arity.admits(static_cast<std::size_t>(__builtin_popcountll(mask)))) continue;
    FinSet u;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mask >> i & 1) u.insert(u.end(), x[i].begin(), x[i].end());
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), finset_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> extracted_words(const VariableWordList& ws, std::size_t max_blocks, SpanMode mode,
                                         const Alphabet& alphabet) {
  std::vector<Word> index_blocks;
  for (std::size_t n = 0; n < ws.size(); ++n) index_blocks.push_back(Word::singleton(static_cast<Position>(n), kStar));
  std::set<std::string> seen;
  std::vector<std::string> out;
  for_each_span_element(index_blocks, mode, Arity::at_most(static_cast<unsigned>(std::max<std::size_t>(max_blocks, 1))),
                        alphabet, [&](const Word& q) {
                          std::string u;
                          for (const auto& e : q.entries()) {
                            for (char c : ws[e.pos])
                              u += (c == alphabet.star() && e.sym != kStar) ? alphabet.render(e.sym) : c;
                          }
                          if (seen.insert(u).second) out.push_back(std::move(u));
                          return true;
                        });
  if (max_blocks == 0) out.clear();
  auto rank = [&](char c) { return c == alphabet.star() ? alphabet.size() : static_cast<std::size_t>(alphabet.parse(c)); };
  std::sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](char x, char y) { return rank(x) < rank(y); });
  });
  return out;
}

std::optional<Color> is_homogeneous(const ColorFunction& f, std::span<const Word> s) {
  if (s.empty()) throw Error(Errc::EmptySet, "homogeneity of an empty family");
  const Color first = f(s.front());
  for (std::size_t i = 1; i < s.size(); ++i)
    if (f(s[i]) != first) return std::nullopt;
  return first;
}

std::optional<Color> is_homogeneous(const Coloring& f, std::span<const Word> s) { return is_homogeneous(view(f), s); }

std::optional<Color> is_homogeneous(const SetColoring& g, std::span<const FinSet> s) {
  if (s.empty()) throw Error(Errc::EmptySet, "homogeneity of an empty family");
  const Color first = g(s.front());
  for (std::size_t i = 1; i < s.size(); ++i)
    if (g(s[i]) != first) return std::nullopt;
  return first;
}

}  // namespace carlson
