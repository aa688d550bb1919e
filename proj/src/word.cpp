#include "carlson/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace carlson {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::EmptyOperand: return "EmptyOperand";
    case Errc::NotSeparated: return "NotSeparated";
    case Errc::OutOfWindow: return "OutOfWindow";
    case Errc::EmptySet: return "EmptySet";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::WindowOverflow: return "WindowOverflow";
    case Errc::NotWeaklyThin: return "NotWeaklyThin";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::ScheduleGap: return "ScheduleGap";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::HashMismatch: return "HashMismatch";
    case Errc::MalformedCertificate: return "MalformedCertificate";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::AmbiguousLimit: return "AmbiguousLimit";
  }
  return "Unknown";
}

Alphabet::Alphabet(std::string letters, char star) : letters_(std::move(letters)), star_(star) {
  if (letters_.empty()) throw Error(Errc::InvalidArgument, "alphabet must have at least one letter");
  if (letters_.size() >= kStar) throw Error(Errc::InvalidArgument, "alphabet too large");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == star_) throw Error(Errc::InvalidArgument, "star symbol listed as a letter");
    if (letters_.find(letters_[i], i + 1) != std::string::npos)
      throw Error(Errc::InvalidArgument, std::string("duplicate letter '") + letters_[i] + "'");
  }
}

char Alphabet::render(Symbol s) const {
  if (s == kStar) return star_;
  if (s >= letters_.size()) throw Error(Errc::UnknownSymbol, "symbol rank " + std::to_string(s));
  return letters_[s];
}

Symbol Alphabet::parse(char c) const {
  if (c == star_) return kStar;
  auto at = letters_.find(c);
  if (at == std::string::npos) throw Error(Errc::UnknownSymbol, std::string("'") + c + "'");
  return static_cast<Symbol>(at);
}

Word Word::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.pos < b.pos; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].pos == entries[i - 1].pos)
      throw Error(Errc::InvalidArgument, "position " + std::to_string(entries[i].pos) + " assigned twice");
  Word w;
  w.entries_ = std::move(entries);
  return w;
}

bool Word::has_star() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.sym == kStar; });
}

std::size_t Word::count(Symbol s) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const Entry& e) { return e.sym == s; }));
}

Position Word::min_pos() const {
  if (entries_.empty()) throw Error(Errc::EmptyOperand, "min of the unit");
  return entries_.front().pos;
}

Position Word::max_pos() const {
  if (entries_.empty()) throw Error(Errc::EmptyOperand, "max of the unit");
  return entries_.back().pos;
}

std::optional<Symbol> Word::at(Position pos) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), pos,
                             [](const Entry& e, Position p) { return e.pos < p; });
  if (it == entries_.end() || it->pos != pos) return std::nullopt;
  return it->sym;
}

Word Word::shifted(Position offset) const {
  Word w = *this;
  for (auto& e : w.entries_) e.pos += offset;
  return w;
}

WordKind classify(const Word& w, const Alphabet& alphabet) {
  bool star = false;
  for (const auto& e : w.entries()) {
    if (!alphabet.contains(e.sym)) throw Error(Errc::UnknownSymbol, "symbol rank " + std::to_string(e.sym));
    star = star || e.sym == kStar;
  }
  if (w.empty()) return WordKind::Unit;
  return star ? WordKind::VariableWord : WordKind::Word;
}

Word instantiate(const Word& p, Symbol x, const Alphabet& alphabet) {
  if (!alphabet.contains(x)) throw Error(Errc::UnknownSymbol, "instantiating with rank " + std::to_string(x));
  if (x == kStar) return p;
  std::vector<Entry> out(p.entries().begin(), p.entries().end());
  for (auto& e : out)
    if (e.sym == kStar) e.sym = x;
  return Word::from_entries(std::move(out));
}

bool precedes(const Word& p, const Word& q) {
  if (p.empty() || q.empty()) throw Error(Errc::EmptyOperand, "precedes on the unit");
  return p.max_pos() < q.min_pos();
}

Word unite(const Word& p, const Word& q) {
  if (p.empty()) return q;
  if (q.empty()) return p;
  const Word* lo = &p;
  const Word* hi = &q;
  if (!precedes(p, q)) {
    if (!precedes(q, p)) throw Error(Errc::NotSeparated, "domains interleave or overlap");
    std::swap(lo, hi);
  }
  std::vector<Entry> out;
  out.reserve(p.size() + q.size());
  out.insert(out.end(), lo->entries().begin(), lo->entries().end());
  out.insert(out.end(), hi->entries().begin(), hi->entries().end());
  return Word::from_entries(std::move(out));
}

namespace {

unsigned order_digit(Symbol s) noexcept { return s == kStar ? 1u : 2u + s; }

}  // namespace

std::strong_ordering canonical_compare(const Word& a, const Word& b) noexcept {
  auto ea = a.entries();
  auto eb = b.entries();
  auto ia = ea.size();
  auto ib = eb.size();
  // Walk both from the highest position down.
  while (ia > 0 || ib > 0) {
    if (ia == 0) return std::strong_ordering::less;
    if (ib == 0) return std::strong_ordering::greater;
    const Entry& x = ea[ia - 1];
    const Entry& y = eb[ib - 1];
    if (x.pos != y.pos) return x.pos < y.pos ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.sym != y.sym) return order_digit(x.sym) <=> order_digit(y.sym);
    --ia;
    --ib;
  }
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& e : w.entries()) {
    h = (h ^ e.pos) * 1099511628211ull;
    h = (h ^ e.sym) * 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t table_size(std::size_t letters, unsigned window) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < window; ++i) {
    if (size > (std::uint64_t{1} << 62) / (letters + 1)) throw Error(Errc::Overflow, "window too large to tabulate");
    size *= letters + 1;
  }
  return size;
}

std::uint64_t canonical_index(const Word& p, const Alphabet& alphabet, unsigned window) {
  const std::uint64_t base = alphabet.size() + 1;
  std::uint64_t index = 0;
  std::uint64_t weight = 1;
  Position at = 0;
  for (const auto& e : p.entries()) {
    if (e.pos >= window) throw Error(Errc::OutOfWindow, "position " + std::to_string(e.pos) + " >= " + std::to_string(window));
    if (e.sym == kStar || e.sym >= alphabet.size()) throw Error(Errc::UnknownSymbol, "canonical_index takes star-free words");
    for (; at < e.pos; ++at) weight *= base;
    index += weight * (1u + e.sym);
  }
  return index;
}

Word word_from_index(std::uint64_t index, const Alphabet& alphabet, unsigned window) {
  const std::uint64_t base = alphabet.size() + 1;
  if (index >= table_size(alphabet.size(), window))
    throw Error(Errc::OutOfWindow, "index " + std::to_string(index) + " outside window " + std::to_string(window));
  std::vector<Entry> entries;
  for (Position pos = 0; index != 0; ++pos, index /= base) {
    auto digit = index % base;
    if (digit != 0) entries.push_back({pos, static_cast<Symbol>(digit - 1)});
  }
  return Word::from_entries(std::move(entries));
}

std::uint64_t variable_index(const Word& p, const Alphabet& alphabet, unsigned window) {
  const std::uint64_t base = alphabet.size() + 2;
  std::uint64_t index = 0;
  std::uint64_t weight = 1;
  Position at = 0;
  for (const auto& e : p.entries()) {
    if (e.pos >= window) throw Error(Errc::OutOfWindow, "position " + std::to_string(e.pos));
    if (!alphabet.contains(e.sym)) throw Error(Errc::UnknownSymbol, "symbol rank " + std::to_string(e.sym));
    for (; at < e.pos; ++at) weight *= base;
    index += weight * order_digit(e.sym);
  }
  return index;
}

namespace {

// Odometer over digits 0..radix-1 at positions [lo, hi), least significant
// at lo. digit_symbol maps a nonzero digit to its symbol.
template <typename DigitSymbol, typename Visit>
void odometer(Position lo, Position hi, unsigned radix, bool skip_zero, DigitSymbol digit_symbol, Visit visit) {
  const std::size_t width = hi > lo ? hi - lo : 0;
  std::vector<unsigned> digits(width, 0);
  std::vector<Entry> entries;
  bool first = true;
  for (;;) {
    if (!(first && skip_zero)) {
      entries.clear();
      for (std::size_t i = 0; i < width; ++i)
        if (digits[i] != 0) entries.push_back({static_cast<Position>(lo + i), digit_symbol(digits[i])});
      if (!visit(entries)) return;
    }
    first = false;
    std::size_t i = 0;
    while (i < width && ++digits[i] == radix) digits[i++] = 0;
    if (i == width) return;
  }
}

}  // namespace

void for_each_word(const Alphabet& alphabet, Position lo, Position hi, bool include_unit,
                   const std::function<bool(const Word&)>& visit) {
  const auto radix = static_cast<unsigned>(alphabet.size() + 1);
  odometer(lo, hi, radix, !include_unit, [](unsigned d) { return static_cast<Symbol>(d - 1); },
           [&](const std::vector<Entry>& entries) { return visit(Word::from_entries(entries)); });
}

void for_each_variable_word(const Alphabet& alphabet, Position lo, Position hi,
                            const std::function<bool(const Word&)>& visit) {
  const auto radix = static_cast<unsigned>(alphabet.size() + 2);
  odometer(lo, hi, radix, true, [](unsigned d) { return d == 1 ? kStar : static_cast<Symbol>(d - 2); },
           [&](const std::vector<Entry>& entries) {
             bool star = std::any_of(entries.begin(), entries.end(), [](const Entry& e) { return e.sym == kStar; });
             return !star || visit(Word::from_entries(entries));
           });
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : w.entries()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e.pos);
    out += ':';
    out += alphabet.render(e.sym);
  }
  out += '}';
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  auto fail = [&](const std::string& why) { return Error(Errc::ParseError, "word '" + std::string(text) + "': " + why); };
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  auto body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') throw fail("expected braces");
  body = trim(body.substr(1, body.size() - 2));
  std::vector<Entry> entries;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw fail("entry without ':'");
    auto pos_text = trim(item.substr(0, colon));
    auto sym_text = trim(item.substr(colon + 1));
    Position pos = 0;
    auto [ptr, ec] = std::from_chars(pos_text.data(), pos_text.data() + pos_text.size(), pos);
    if (ec != std::errc{} || ptr != pos_text.data() + pos_text.size()) throw fail("bad position");
    if (sym_text.size() != 1) throw fail("symbols are single characters");
    entries.push_back({pos, alphabet.parse(sym_text[0])});
  }
  return Word::from_entries(std::move(entries));
}

Arity Arity::at_most(unsigned r) {
  if (r == 0) throw Error(Errc::InvalidArgument, "arity bound must be positive");
  Arity a;
  a.bound_ = r;
  return a;
}

std::string to_string(Arity arity) { return arity.unbounded() ? "all" : std::to_string(arity.bound()); }

Arity parse_arity(std::string_view text) {
  if (text == "all") return Arity::all();
  unsigned r = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
  if (ec != std::errc{} || ptr != text.data() + text.size() || r == 0)
    throw Error(Errc::ParseError, "arity '" + std::string(text) + "'");
  return Arity::at_most(r);
}

}  // namespace carlson
