#include "doctest.h"

#include <algorithm>
#include <random>

#include "carlson/transport.hpp"
#include "support.hpp"

using namespace carlson;
using fixture::ab;
using fixture::w;

TEST_CASE("binary encoding") {
  CHECK(nat_to_finset(6) == FinSet{1, 2});
  CHECK(finset_to_nat({0}) == 1);
  CHECK_THROWS_AS(nat_to_finset(0), Error);
  CHECK_THROWS_AS(finset_to_nat({}), Error);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = 1 + rng() % ((1u << 20) - 1);
    REQUIRE(finset_to_nat(nat_to_finset(n)) == n);
  }
}

TEST_CASE("binary encoding is additive on separated sets") {
  for (std::uint64_t a = 1; a < 64; ++a)
    for (std::uint64_t b = 1; b < 16; ++b) {
      const auto e = nat_to_finset(a);
      auto f = nat_to_finset(b);
      for (auto& x : f) x += 6;
      FinSet u = e;
      u.insert(u.end(), f.begin(), f.end());
      CHECK(finset_to_nat(u) == finset_to_nat(e) + finset_to_nat(f));
    }
}

TEST_CASE("apartness") {
  CHECK(profile(6).lambda == 1);
  CHECK(profile(6).mu == 2);
  const std::vector<std::uint64_t> good{1, 4, 16}, bad{1, 3};
  CHECK(is_two_apart(good));
  CHECK_FALSE(is_two_apart(bad));
  CHECK_THROWS_AS(profile(0), Error);
}

TEST_CASE("find_high_lambda examples") {
  auto evens = NatStream::arithmetic(2, 2, 100);
  auto b = find_high_lambda(evens, 0);
  REQUIRE(b);
  CHECK(b->elements == std::vector<std::uint64_t>{2});

  auto odds = NatStream::arithmetic(1, 2, 100);
  b = find_high_lambda(odds, 1);
  REQUIRE(b);
  CHECK(b->elements == std::vector<std::uint64_t>{1, 3});
  CHECK(profile(b->sum).lambda >= 1);

  auto pows = NatStream::powers_of_two(100);
  b = find_high_lambda(pows, 5);
  REQUIRE(b);
  CHECK(b->sum == 32);
  CHECK(b->elements == std::vector<std::uint64_t>{32});

  auto tiny = NatStream::arithmetic(1, 2, 2);
  CHECK_FALSE(find_high_lambda(tiny, 6).has_value());
}

TEST_CASE("find_high_lambda against brute force over pairs on odds") {
  // Any two odd numbers sum to an even number; the least pair with lambda >= 1
  // in stream order is the first two elements.
  for (std::uint64_t start = 1; start < 40; start += 2) {
    auto s = NatStream::arithmetic(start, 2, 50);
    auto b = find_high_lambda(s, 1);
    REQUIRE(b);
    CHECK(b->elements == std::vector<std::uint64_t>{start, start + 2});
  }
}

TEST_CASE("normalize_two_apart") {
  auto pows = NatStream::powers_of_two(64);
  auto r = normalize_two_apart(pows, 10);
  REQUIRE(r);
  for (std::size_t i = 0; i < 10; ++i) CHECK(r->sums[i] == std::uint64_t{1} << i);

  auto odds = NatStream::arithmetic(1, 2, 1 << 20);
  r = normalize_two_apart(odds, 20);
  REQUIRE(r);
  CHECK(r->sums[0] == 1);
  CHECK(r->blocks[0] == FinSet{0});
  CHECK(is_two_apart(r->sums));
  for (std::size_t i = 0; i < r->sums.size(); ++i) {
    std::uint64_t s = 0;
    for (auto j : r->blocks[i]) s += r->base[j];
    CHECK(s == r->sums[i]);
    if (i) CHECK(r->blocks[i - 1].back() < r->blocks[i].front());
  }
}

TEST_CASE("iota maps") {
  const FinSetSequence x({{0}, {2}, {5}});
  CHECK(iota_fu(x, {0, 2}) == FinSet{0, 5});
  CHECK(iota_fu(x, {1}) == FinSet{2});
  CHECK_THROWS_AS(iota_fu(x, {3}), Error);

  const BlockSequence y({w("{0:*}"), w("{2:*}")});
  CHECK(iota_located(y, w("{0:a,1:b}"), ab()) == w("{0:a,2:b}"));
  CHECK(iota_located(y, w("{1:*}"), ab()) == w("{2:*}"));
  CHECK(iota_located(BlockSequence({w("{0:*,1:a}")}), w("{0:b}"), ab()) == w("{0:b,1:a}"));
  CHECK_THROWS_AS(iota_located(y, w("{2:a}"), ab()), Error);
}

TEST_CASE("iota_fu is a morphism on separated index sets") {
  const FinSetSequence x({{0, 1}, {3}, {4, 6}, {8, 9, 10}});
  int pairs = 0;
  for (std::uint64_t a = 1; a < 16; ++a)
    for (std::uint64_t b = 1; b < 16; ++b) {
      if (a & b) continue;
      const auto ea = nat_to_finset(a), eb = nat_to_finset(b);
      if (ea.back() > eb.front()) continue;
      ++pairs;
      FinSet u = iota_fu(x, ea);
      const auto v = iota_fu(x, eb);
      u.insert(u.end(), v.begin(), v.end());
      CHECK(iota_fu(x, nat_to_finset(a | b)) == u);
    }
  CHECK(pairs > 0);
}

TEST_CASE("collapse and lift") {
  const VariableWordList ws({"*", "**"}, ab());
  CHECK(collapse_to_words(w("{0:a,1:*}"), ws, ab()) == "a**");
  CHECK(lift_from_words("abb", ab()) == w("{0:a,1:b}"));
  CHECK_THROWS_AS(lift_from_words("ab", ab()), Error);
  const auto dy = dyadic_word_list(3, ab());
  for (const auto& nw : naive::all_words(3, 3)) {
    if (nw.empty()) continue;
    naive::NWord v;
    for (auto [pos, s] : nw) v[pos] = s == 2 ? naive::kVar : s;
    const Word p = fixture::from_naive(v);
    CHECK(lift_from_words(collapse_to_words(p, dy, ab()), ab()) == p);
  }
}

TEST_CASE("collapse is a morphism") {
  const VariableWordList ws({"*a", "b*", "**", "*"}, ab());
  for (const auto& np : naive::all_words(2, 3))
    for (const auto& nq : naive::all_words(2, 3)) {
      if (np.empty() || nq.empty()) continue;
      naive::NWord p, q;
      for (auto [pos, s] : np) p[pos] = s == 2 ? naive::kVar : s;
      for (auto [pos, s] : nq) q[pos + 2] = s == 2 ? naive::kVar : s;
      const Word wp = fixture::from_naive(p), wq = fixture::from_naive(q);
      CHECK(collapse_to_words(unite(wp, wq), ws, ab()) ==
            collapse_to_words(wp, ws, ab()) + collapse_to_words(wq, ws, ab()));
    }
}
