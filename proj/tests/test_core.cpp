#include "doctest.h"

#include <random>
#include <set>

#include "carlson/coloring.hpp"
#include "carlson/word.hpp"
#include "support.hpp"

using namespace carlson;
using fixture::ab;
using fixture::w;

TEST_CASE("instantiate") {
  CHECK(instantiate(w("{0:*,2:a}"), 1, ab()) == w("{0:b,2:a}"));
  CHECK(instantiate(w("{0:*}"), kStar, ab()) == w("{0:*}"));
  CHECK(instantiate(w("{1:*,3:*}"), 0, ab()) == w("{1:a,3:a}"));
  CHECK_THROWS_AS(instantiate(w("{0:*}"), 7, ab()), Error);
}

TEST_CASE("precedes") {
  CHECK(precedes(w("{0:a}"), w("{1:b}")));
  CHECK_FALSE(precedes(w("{1:a}"), w("{0:b}")));
  CHECK_FALSE(precedes(w("{0:a,3:b}"), w("{2:a}")));
  try {
    precedes(Word{}, w("{0:a}"));
    FAIL("unit accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyOperand);
  }
}

TEST_CASE("unite") {
  CHECK(unite(w("{0:a}"), w("{2:b}")) == w("{0:a,2:b}"));
  CHECK(unite(w("{2:b}"), w("{0:a}")) == w("{0:a,2:b}"));
  CHECK(unite(Word{}, w("{1:a}")) == w("{1:a}"));
  try {
    unite(w("{0:a}"), w("{0:b}"));
    FAIL("overlap accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSeparated);
  }
  CHECK_THROWS_AS(unite(w("{0:a,2:a}"), w("{1:b}")), Error);
}

TEST_CASE("classify") {
  CHECK(classify(w("{0:a,1:b}"), ab()) == WordKind::Word);
  CHECK(classify(w("{0:*}"), ab()) == WordKind::VariableWord);
  CHECK(classify(Word{}, ab()) == WordKind::Unit);
  CHECK_THROWS_AS(parse_word("{0:c}", ab()), Error);
}

TEST_CASE("canonical index examples") {
  CHECK(canonical_index(Word{}, ab(), 2) == 0);
  CHECK(canonical_index(w("{0:a}"), ab(), 2) == 1);
  CHECK(canonical_index(w("{1:b}"), ab(), 2) == 6);
  try {
    canonical_index(w("{2:a}"), ab(), 2);
    FAIL("out of window accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfWindow);
  }
}

TEST_CASE("canonical index is a bijection and matches the digit oracle") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const Alphabet A(std::string("abc").substr(0, k));
    for (unsigned n = 0; n <= 6; ++n) {
      const auto size = table_size(k, n);
      std::set<std::uint64_t> seen;
      for (const auto& nw : naive::all_words(n, static_cast<int>(k))) {
        const Word x = fixture::from_naive(nw);
        const auto idx = canonical_index(x, A, n);
        REQUIRE(idx == naive::index_of(nw, static_cast<int>(k), n));
        REQUIRE(word_from_index(idx, A, n) == x);
        seen.insert(idx);
      }
      CHECK(seen.size() == size);
      CHECK(*seen.rbegin() == size - 1);
    }
  }
}

TEST_CASE("instantiation keeps the domain and the kind flips") {
  for (const auto& nw : naive::all_variable_words(4, 2)) {
    const Word p = fixture::from_naive(nw);
    for (Symbol a = 0; a < 2; ++a) {
      const Word pa = instantiate(p, a, ab());
      CHECK(pa.size() == p.size());
      CHECK(pa.min_pos() == p.min_pos());
      CHECK(pa.max_pos() == p.max_pos());
      CHECK(classify(pa, ab()) == WordKind::Word);
    }
    CHECK(classify(instantiate(p, kStar, ab()), ab()) == WordKind::VariableWord);
  }
}

TEST_CASE("union is associative and commutative on separated triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Word> parts;
    Position at = 0;
    for (int j = 0; j < 3; ++j) {
      std::vector<Entry> es;
      const auto len = 1 + rng() % 3;
      for (unsigned i = 0; i < len; ++i, ++at)
        if (i == 0 || rng() % 2) es.push_back({at, static_cast<Symbol>(rng() % 3 == 2 ? kStar : rng() % 2)});
      parts.push_back(Word::from_entries(es));
      at += static_cast<Position>(rng() % 2);
    }
    const auto& [p, q, r] = std::tie(parts[0], parts[1], parts[2]);
    CHECK(unite(unite(p, q), r) == unite(p, unite(q, r)));
    CHECK(unite(p, q) == unite(q, p));
    CHECK(unite(Word{}, p) == p);
    CHECK(unite(p, Word{}) == p);
  }
}

TEST_CASE("canonical order agrees with the index on star-free words") {
  const auto words = naive::all_words(4, 2);
  for (std::size_t i = 0; i < words.size(); i += 3)
    for (std::size_t j = 0; j < words.size(); j += 5) {
      const Word a = fixture::from_naive(words[i]), b = fixture::from_naive(words[j]);
      CHECK((canonical_compare(a, b) < 0) == (canonical_index(a, ab(), 4) < canonical_index(b, ab(), 4)));
    }
}

TEST_CASE("rendering round trips") {
  for (const auto& nw : naive::all_variable_words(3, 2)) {
    const Word p = fixture::from_naive(nw);
    CHECK(parse_word(to_string(p, ab()), ab()) == p);
  }
  CHECK(to_string(w("{2:*,0:a}"), ab()) == "{0:a,2:*}");
}

TEST_CASE("rule colorings agree with their tables and extend past the window") {
  const Coloring f = fixture::parity(3);
  CHECK(f.table().size() == 27);
  CHECK(f(w("{0:a,1:b}")) == 0);
  CHECK(f(w("{7:a}")) == 1);
  const Coloring t = Coloring::from_table(ab(), 2, 3, std::vector<Color>(f.table().begin(), f.table().end()));
  // The rule is part of the identity: it fixes values past the window.
  CHECK(t.content_hash() != f.content_hash());
  CHECK(Coloring::from_table(ab(), 2, 3, std::vector<Color>(t.table().begin(), t.table().end())).content_hash() ==
        t.content_hash());
  CHECK_THROWS_AS(t(w("{7:a}")), Error);
  CHECK(fixture::letter_count(2)(w("{0:a,1:a}")) == 0);
  CHECK(fixture::letter_count(2)(w("{0:a,1:b}")) == 1);
}

TEST_CASE("arity parsing") {
  CHECK(parse_arity("all") == Arity::all());
  CHECK(parse_arity("2") == Arity::at_most(2));
  CHECK(to_string(Arity::at_most(3)) == "3");
  CHECK_THROWS_AS(parse_arity("0"), Error);
}
