#include "carlson/transport.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <random>

namespace carlson {

FinSet nat_to_finset(std::uint64_t n) {
  if (n == 0) throw Error(Errc::ZeroInput, "0 encodes the empty set");
  FinSet e;
  for (std::uint32_t i = 0; n != 0; ++i, n >>= 1)
    if (n & 1) e.push_back(i);
  return e;
}

std::uint64_t finset_to_nat(const FinSet& e) {
  if (e.empty()) throw Error(Errc::EmptySet, "finset_to_nat of the empty set");
  std::uint64_t n = 0;
  for (auto i : e) {
    if (i >= 64) throw Error(Errc::Overflow, "element " + std::to_string(i) + " does not fit 64 bits");
    if (n >> i & 1) throw Error(Errc::InvalidArgument, "repeated element " + std::to_string(i));
    n |= std::uint64_t{1} << i;
  }
  return n;
}

ApartnessProfile profile(std::uint64_t n) {
  if (n == 0) throw Error(Errc::ZeroInput, "profile of 0");
  return {n, static_cast<unsigned>(std::countr_zero(n)), static_cast<unsigned>(63 - std::countl_zero(n))};
}

bool is_two_apart(std::span<const std::uint64_t> a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto cur = profile(a[i]);
    if (i > 0 && profile(a[i - 1]).mu >= cur.lambda) return false;
  }
  return true;
}

std::optional<std::uint64_t> NatStream::next() {
  if (reads_ >= budget_) return std::nullopt;
  auto v = source_();
  if (!history_.empty() && v <= history_.back())
    throw Error(Errc::InvalidArgument, "stream is not strictly increasing at read " + std::to_string(reads_));
  ++reads_;
  history_.push_back(v);
  return v;
}

NatStream NatStream::arithmetic(std::uint64_t start, std::uint64_t step, std::size_t budget) {
  if (step == 0) throw Error(Errc::InvalidArgument, "step must be positive");
  return NatStream([next = start, step]() mutable {
    auto v = next;
    next += step;
    return v;
  }, budget);
}

NatStream NatStream::powers_of_two(std::size_t budget) {
  return NatStream([i = 0u]() mutable {
    if (i >= 64) throw Error(Errc::Overflow, "powers of two past 2^63");
    return std::uint64_t{1} << i++;
  }, budget);
}

NatStream NatStream::random_gaps(std::uint64_t seed, std::uint64_t start, std::uint64_t max_gap, std::size_t budget) {
  if (max_gap == 0) throw Error(Errc::InvalidArgument, "max gap must be positive");
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return NatStream([rng, next = start, max_gap, first = true]() mutable {
    if (!first) next += 1 + (*rng)() % max_gap;
    first = false;
    return next;
  }, budget);
}

namespace {

StreamBlock merge(StreamBlock a, const StreamBlock& b) {
  a.indices.insert(a.indices.end(), b.indices.begin(), b.indices.end());
  a.elements.insert(a.elements.end(), b.elements.begin(), b.elements.end());
  if (__builtin_add_overflow(a.sum, b.sum, &a.sum)) throw Error(Errc::Overflow, "block sum overflows 64 bits");
  return a;
}

}  // namespace

std::optional<StreamBlock> find_high_lambda(NatStream& x, unsigned k) {
  if (k >= 64) throw Error(Errc::Overflow, "lambda target past 63");
  // pending[j] holds an unused block whose sum has lambda exactly j < k. A
  // new block with the same lambda merges with it like a binary carry, so
  // the merged sum has strictly larger lambda. Nothing read is wasted until
  // the target is reached.
  std::vector<std::optional<StreamBlock>> pending(k);
  for (;;) {
    auto v = x.next();
    if (!v) return std::nullopt;
    if (*v == 0) continue;  // 0 is not the sum of a nonempty block
    StreamBlock b{{static_cast<std::uint32_t>(x.reads() - 1)}, {*v}, *v};
    for (;;) {
      const unsigned j = profile(b.sum).lambda;
      if (j >= k) {
        std::sort(b.indices.begin(), b.indices.end());
        std::sort(b.elements.begin(), b.elements.end());
        return b;
      }
      if (!pending[j]) {
        pending[j] = std::move(b);
        break;
      }
      b = merge(std::move(*pending[j]), b);
      pending[j].reset();
    }
  }
}

std::optional<FSRefinement> normalize_two_apart(NatStream& x, std::size_t count) {
  std::vector<FinSet> blocks;
  std::vector<std::uint64_t> sums;
  while (sums.size() < count) {
    std::optional<StreamBlock> b;
    if (sums.empty()) {
      b = find_high_lambda(x, 0);
    } else {
      auto target = profile(sums.back()).mu + 1;
      if (target >= 64) throw Error(Errc::Overflow, "2-apart outputs exceed 64 bits");
      b = find_high_lambda(x, target);
    }
    if (!b) return std::nullopt;
    blocks.push_back(std::move(b->indices));
    sums.push_back(b->sum);
  }
  return FSRefinement{x.history(), FinSetSequence(std::move(blocks)), std::move(sums)};
}

std::uint64_t iota_fs(std::span<const std::uint64_t> x, std::uint64_t n) {
  std::uint64_t s = 0;
  for (auto i : nat_to_finset(n)) {
    if (i >= x.size()) throw Error(Errc::IndexOutOfRange, "bit " + std::to_string(i) + " past the base sequence");
    if (__builtin_add_overflow(s, x[i], &s)) throw Error(Errc::Overflow, "iota_fs overflows 64 bits");
  }
  return s;
}

FinSet iota_fu(const FinSetSequence& x, const FinSet& e) {
  FinSet out;
  for (auto i : e) {
    if (i >= x.size()) throw Error(Errc::IndexOutOfRange, "block index " + std::to_string(i));
    out.insert(out.end(), x[i].begin(), x[i].end());
  }
  return make_finset(std::move(out));
}

Word iota_located(const BlockSequence& x, const Word& q, const Alphabet& alphabet) {
  std::vector<Entry> out;
  for (const auto& e : q.entries()) {
    if (e.pos >= x.size()) throw Error(Errc::IndexOutOfRange, "block index " + std::to_string(e.pos));
    auto block = instantiate(x[e.pos], e.sym, alphabet);
    out.insert(out.end(), block.entries().begin(), block.entries().end());
  }
  return Word::from_entries(std::move(out));
}

std::string collapse_to_words(const Word& p, const VariableWordList& ws, const Alphabet& alphabet) {
  std::string u;
  for (const auto& e : p.entries()) {
    if (e.pos >= ws.size()) throw Error(Errc::IndexOutOfRange, "word index " + std::to_string(e.pos));
    const char x = alphabet.render(e.sym);
    for (char c : ws[e.pos]) u += c == alphabet.star() ? x : c;
  }
  return u;
}

Word lift_from_words(std::string_view u, const Alphabet& alphabet) {
  std::vector<Entry> entries;
  std::size_t at = 0;
  std::uint64_t length = u.size();
  for (Position n = 0; length != 0; ++n, length >>= 1) {
    if (!(length & 1)) continue;
    const std::size_t run = std::size_t{1} << n;
    const char c = u[at];
    for (std::size_t i = at; i < at + run; ++i)
      if (u[i] != c)
        throw Error(Errc::ParseError, "segment of length " + std::to_string(run) + " at offset " + std::to_string(at) +
                                          " is not constant");
    entries.push_back({n, alphabet.parse(c)});
    at += run;
  }
  return Word::from_entries(std::move(entries));
}

}  // namespace carlson
