#include "doctest.h"

#include <random>

#include "carlson/hj.hpp"
#include "carlson/parallel.hpp"
#include "carlson/verify.hpp"
#include "support.hpp"

using namespace carlson;
using fixture::ab;
using fixture::w;

TEST_CASE("hj_witness examples") {
  auto c = hj_witness(fixture::constant(1));
  REQUIRE(c);
  CHECK(c->p == w("{0:*}"));
  auto p = hj_witness(fixture::parity(1));
  REQUIRE(p);
  CHECK(p->p == w("{0:*}"));
  CHECK(p->color == 1);

  // 1 iff position 0 holds a
  const auto f = Coloring::tabulate(ab(), 2, 2, [](const Word& x) { return Color(x.at(0) == Symbol{0}); });
  auto r = hj_witness(f);
  REQUIRE(r);
  CHECK(r->p == w("{1:*}"));
  CHECK(r->color == 0);
}

TEST_CASE("hj_witness matches the serial reference and the generic search") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto f = fixture::random_table(rng, 2, 1 + i % 3);
    const auto a = hj_witness(f), b = hj_witness_serial(f), c = hj_witness(view(f), ab(), 0, f.window());
    CHECK(a == b);
    CHECK(a.has_value() == c.has_value());
    if (a && c) CHECK(a->p == c->p);
  }
}

TEST_CASE("hj witnesses are least, verified, and survive window growth") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto f = fixture::random_table(rng, 2, 3);
    const auto wit = hj_witness(f);
    REQUIRE(wit);
    CHECK(verify_hj(f, *wit).ok);
    // no canonically smaller variable word works
    for_each_variable_word(ab(), 0, 3, [&](const Word& p) {
      if (canonical_compare(p, wit->p) >= 0) return false;
      CHECK(f(instantiate(p, 0, ab())) != f(instantiate(p, 1, ab())));
      return true;
    });
    // a wider window containing f as its restriction keeps the witness
    const auto g = Coloring::tabulate(ab(), 2, 4, [&](const Word& x) {
      return x.empty() || x.max_pos() < 3 ? f(x) : static_cast<Color>(rng() % 2);
    });
    auto wg = hj_witness(g);
    REQUIRE(wg);
    CHECK(wg->p == wit->p);
  }
}

TEST_CASE("HJ numbers agree with the naive enumerator") {
  const int oracle = naive::hj_number(2, 2, 3);
  REQUIRE(oracle > 0);
  const auto r = hj_number(2, 2, 3);
  REQUIRE(r.value);
  CHECK(static_cast<int>(*r.value) == oracle);
  CHECK(hj_number_serial(2, 2, 3).value == r.value);
  CHECK(hj_number(2, 1, 3).value == 1u);
  CHECK(naive::hj_number(2, 1, 3) == 1);
  CHECK(hj_number(2, 2, 1).value.has_value() == (oracle <= 1));
  // Every recorded lineless coloring really has no line.
  for (std::size_t n = 0; n < r.lineless_witnesses.size(); ++n) {
    const unsigned window = static_cast<unsigned>(n + 1);
    const auto table = coloring_from_index(r.lineless_witnesses[n], 2, 2, window);
    CHECK_FALSE(hj_witness(Coloring::from_table(ab(), 2, window, table)).has_value());
  }
}

TEST_CASE("count_lineless kernels agree") {
  for (unsigned window = 1; window <= 2; ++window) {
    const auto total = coloring_count(2, 2, window);
    CHECK(count_lineless(2, 2, window, 0, total) == count_lineless_serial(2, 2, window, 0, total));
  }
  const auto total = coloring_count(2, 2, 3);
  const std::uint64_t end = std::min<std::uint64_t>(total, 1 << 16);
  CHECK(count_lineless(2, 2, 3, 0, end) == count_lineless_serial(2, 2, 3, 0, end));
  CHECK(count_lineless(2, 2, 3, 0, end) == 0);
}

TEST_CASE("hj number is independent of the worker count") {
  const auto base = hj_number(2, 2, 3);
  for (int t : {1, 2, 4}) {
    set_worker_count(t);
    const auto r = hj_number(2, 2, 3);
    CHECK(r.value == base.value);
    CHECK(r.lineless_witnesses == base.lineless_witnesses);
  }
  set_worker_count(0);
}
