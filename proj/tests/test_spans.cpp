#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "carlson/spans.hpp"
#include "carlson/transport.hpp"
#include "support.hpp"

using namespace carlson;
using fixture::ab;
using fixture::w;

namespace {

BlockSequence stars(unsigned n) {
  std::vector<Word> out;
  for (Position i = 0; i < n; ++i) out.push_back(Word::singleton(i, kStar));
  return BlockSequence(out);
}

std::set<naive::NWord> as_set(const std::vector<Word>& ws) {
  std::set<naive::NWord> out;
  for (const auto& x : ws) out.insert(fixture::to_naive(x));
  return out;
}

}  // namespace

TEST_CASE("span examples") {
  CHECK(span_located(stars(2), SpanMode::Letters, Arity::all(), ab()).size() == 8);
  const auto one = span_located(stars(1), SpanMode::Letters, Arity::all(), ab());
  CHECK(one == std::vector<Word>{w("{0:a}"), w("{0:b}")});
  CHECK(span_located(stars(2), SpanMode::Letters, Arity::at_most(1), ab()).size() == 4);
  CHECK(span_located(BlockSequence{}, SpanMode::Letters, Arity::all(), ab()).empty());
}

TEST_CASE("span size for all-star blocks") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const Alphabet A(std::string("abc").substr(0, k));
    for (unsigned n = 0; n <= 4; ++n) {
      std::uint64_t expect = 1;
      for (unsigned i = 0; i < n; ++i) expect *= k + 1;
      CHECK(span_located(stars(n), SpanMode::Letters, Arity::all(), A).size() == expect - 1);
    }
  }
}

TEST_CASE("spans agree with the naive enumerator, both modes and arities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Word> blocks;
    Position at = 0;
    const auto n = 1 + rng() % 4;
    for (unsigned j = 0; j < n; ++j) {
      std::vector<Entry> es{{at++, kStar}};
      if (rng() % 2) es.push_back({at++, static_cast<Symbol>(rng() % 2)});
      if (rng() % 3 == 0) es.push_back({at++, kStar});
      blocks.push_back(Word::from_entries(es));
      at += static_cast<Position>(rng() % 2);
    }
    const BlockSequence x(blocks);
    const unsigned r = static_cast<unsigned>(rng() % 4);
    const Arity arity = r == 0 ? Arity::all() : Arity::at_most(r);
    for (bool star : {false, true}) {
      const auto got = span_located(x, star ? SpanMode::WithStar : SpanMode::Letters, arity, ab());
      const auto want = naive::span(fixture::to_naive(x.items()), 2, star, r);
      CHECK(as_set(got) == std::set<naive::NWord>(want.begin(), want.end()));
      CHECK(std::is_sorted(got.begin(), got.end(), CanonicalLess{}));
      CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
      for (const auto& p : got) CHECK(p.has_star() == star);
    }
  }
}

TEST_CASE("the variable span is the span over letters and star, restricted to variable words") {
  const Alphabet with_star("ab*", '#');  // star promoted to a third letter
  const BlockSequence x({w("{0:*,1:a}"), w("{2:*}"), w("{3:b,4:*}")});
  std::set<std::string> lhs, rhs;
  for (const auto& p : span_located(x, SpanMode::WithStar, Arity::all(), ab())) lhs.insert(to_string(p, ab()));
  // Letter ranks 0 and 1 mean the same in both alphabets.
  for (const auto& p : span_located(x, SpanMode::Letters, Arity::all(), with_star)) {
    const auto text = to_string(p, with_star);
    if (text.find('*') != std::string::npos) rhs.insert(text);
  }
  CHECK(lhs == rhs);
}

TEST_CASE("finite sums") {
  const std::vector<std::uint64_t> y12{1, 2}, y124{1, 2, 4};
  CHECK(finite_sums(y12, Arity::all()) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(finite_sums(y124, Arity::all()) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(finite_sums(y124, Arity::at_most(2)) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("finite unions") {
  CHECK(finite_unions(FinSetSequence({{0}, {1}}), Arity::all()) == std::vector<FinSet>{{0}, {1}, {0, 1}});
  CHECK(finite_unions(FinSetSequence({{0, 1}, {3}}), Arity::all()) == std::vector<FinSet>{{0, 1}, {3}, {0, 1, 3}});
  const auto r2 = finite_unions(FinSetSequence({{0}, {1}, {2}}), Arity::at_most(2));
  CHECK(r2.size() == 6);
  CHECK(std::find(r2.begin(), r2.end(), FinSet{0, 1, 2}) == r2.end());
}

TEST_CASE("finite unions agree with the oracle and respect the arity") {
  const FinSetSequence x({{0, 2}, {3}, {4, 5, 7}, {9}});
  for (unsigned r = 0; r <= 4; ++r) {
    const auto got = finite_unions(x, r ? Arity::at_most(r) : Arity::all());
    std::set<std::vector<unsigned>> gs;
    for (const auto& e : got) gs.insert({e.begin(), e.end()});
    std::vector<std::vector<unsigned>> xs;
    for (const auto& e : x.items()) xs.push_back({e.begin(), e.end()});
    CHECK(gs == naive::unions(xs, r));
    CHECK(gs.size() == got.size());
  }
}

TEST_CASE("sums of powers of two are the encoded unions of singletons") {
  for (unsigned n = 1; n <= 6; ++n) {
    std::vector<std::uint64_t> pows;
    std::vector<FinSet> singles;
    for (std::uint32_t i = 0; i < n; ++i) {
      pows.push_back(std::uint64_t{1} << i);
      singles.push_back({i});
    }
    std::vector<std::uint64_t> encoded;
    for (const auto& e : finite_unions(FinSetSequence(singles), Arity::all())) encoded.push_back(finset_to_nat(e));
    std::sort(encoded.begin(), encoded.end());
    CHECK(encoded == finite_sums(pows, Arity::all()));
  }
}

TEST_CASE("extracted words") {
  CHECK(extracted_words(VariableWordList({"*"}, ab()), 1, SpanMode::Letters, ab()) ==
        std::vector<std::string>{"a", "b"});
  const Alphabet a("a");
  auto two = extracted_words(VariableWordList({"*", "**"}, a), 2, SpanMode::Letters, a);
  std::sort(two.begin(), two.end());
  CHECK(two == std::vector<std::string>{"a", "aa", "aaa"});
  CHECK(extracted_words(VariableWordList({"*"}, ab()), 1, SpanMode::WithStar, ab()) == std::vector<std::string>{"*"});
}

TEST_CASE("is_homogeneous") {
  const auto f0 = fixture::constant(3);
  const std::vector<Word> s1{w("{0:a}"), w("{1:b}")}, s2{w("{0:a}"), w("{0:a,1:b}")};
  CHECK(is_homogeneous(f0, s1) == Color{0});
  CHECK(is_homogeneous(fixture::parity(3), s1) == Color{1});
  CHECK_FALSE(is_homogeneous(fixture::parity(3), s2).has_value());
  try {
    is_homogeneous(f0, std::span<const Word>{});
    FAIL("empty set accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptySet);
  }
}
