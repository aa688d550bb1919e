#include "doctest.h"

#include <algorithm>
#include <random>

#include "carlson/dynamics.hpp"
#include "carlson/verify.hpp"
#include "support.hpp"

using namespace carlson;
using fixture::ab;
using fixture::w;

namespace {

std::vector<Coloring> symbolic(unsigned window) {
  return {fixture::constant(window), fixture::parity(window), fixture::letter_count(window)};
}

WeakBlockSequence even_blocks(Position from, Position to) {
  std::vector<Word> xs;
  for (Position i = from; i + 1 < to; i += 2) xs.push_back(Word::from_entries({{i, 0}, {i + 1, 1}}));
  return WeakBlockSequence(xs);
}

}  // namespace

TEST_CASE("shift_restrict examples") {
  const auto par = fixture::parity(4);
  CHECK(shift_restrict(par, 1, w("{2:a}")).table == std::vector<Color>{1, 0, 0});
  for (unsigned ell = 0; ell <= 3; ++ell) {
    const auto h = shift_restrict(par, ell, Word{});
    CHECK(h.table.size() == table_size(2, ell));
    for (std::size_t i = 0; i < h.table.size(); ++i) CHECK(h.table[i] == par.at_index(i));
  }
  const auto c = fixture::constant(6);
  for (const auto& p : {w("{2:a}"), w("{3:b,5:a}")}) {
    const auto h = shift_restrict(c, 2, p);
    CHECK(std::all_of(h.table.begin(), h.table.end(), [](Color x) { return x == 0; }));
  }
  try {
    shift_restrict(par, 2, w("{1:a}"));
    FAIL("shift inside the level accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
}

TEST_CASE("shift composition") {
  // S^l_{q u p}(f) = S^l_q(S^m_p(f)) for q in [l, m), p past m.
  std::mt19937_64 rng(37);
  const auto f = fixture::random_table(rng, 3, 6);
  const unsigned ell = 1, m = 3;
  for_each_word(ab(), ell, m, true, [&](const Word& q) {
    for_each_word(ab(), m, 6, true, [&](const Word& p) {
      const auto outer = shift_restrict(f, m, p);
      CHECK(shift_restrict(f, ell, unite(q, p)) == shift_restrict(outer, ab(), ell, q));
      return true;
    });
    return true;
  });
}

TEST_CASE("is_factor") {
  const auto par = fixture::parity(6);
  CHECK(is_factor(restrict(shift_restrict(par, 2, Word{}), ab(), 2), par, 6) == Word{});
  const auto flipped = shift_restrict(par, 1, w("{1:a}"));
  auto p = is_factor(flipped, par, 6);
  REQUIRE(p);
  CHECK(*p == w("{1:a}"));
  Factor odd{1, {1, 0, 1}};
  CHECK_FALSE(is_factor(odd, fixture::constant(6), 6).has_value());
}

TEST_CASE("recurrence examples") {
  const auto c = fixture::constant(6);
  auto weak = check_recurrence(c, 1, 6, RecurrenceKind::Weak);
  CHECK(weak.holds);
  CHECK(weak.witness == w("{1:a}"));
  for (unsigned m = 2; m <= 4; ++m) CHECK(check_recurrence(c, 1, 6, RecurrenceKind::Uniform, m).holds);

  const auto par = fixture::parity(6);
  auto plain = check_recurrence(par, 1, 6, RecurrenceKind::Plain);
  CHECK(plain.holds);
  CHECK(plain.witness == w("{1:*,2:*}"));
  for (unsigned ell = 0; ell <= 2; ++ell) CHECK(check_recurrence(par, ell, 6, RecurrenceKind::Uniform, ell + 2).holds);
  // p = {1:a} contains a and no q in FIN(0, 1) can remove it
  const auto contains = Coloring::from_rule(ab(), 2, 6, Rule::contains_letter(0));
  const auto u = check_recurrence(contains, 0, 6, RecurrenceKind::Uniform, 1);
  CHECK_FALSE(u.holds);
  CHECK(u.counterexample == w("{1:a}"));
}

TEST_CASE("proximality examples") {
  const auto par = fixture::parity(5);
  auto self = check_proximality(par, par, 1, 5, ProximalityKind::Weak);
  CHECK(self.holds);
  CHECK(self.witness == w("{1:a}"));
  const auto strong = check_proximality(par, par, 1, 5, ProximalityKind::Strong);
  CHECK(strong.witness == check_recurrence(par, 1, 5, RecurrenceKind::Plain).witness);

  const auto c0 = fixture::constant(4, 0), c1 = Coloring::from_rule(ab(), 2, 4, Rule::constant(1));
  CHECK_FALSE(check_proximality(c0, c1, 0, 4, ProximalityKind::Weak).holds);

  const auto shifted = Coloring::from_rule(ab(), 2, 5, Rule::domain_size_mod(2, 1));
  CHECK_FALSE(check_proximality(par, shifted, 0, 5, ProximalityKind::Weak).holds);
}

TEST_CASE("plain witnesses give weak witnesses, strong give plain and weak") {
  for (const auto& f : symbolic(7))
    for (unsigned ell = 0; ell <= 2; ++ell) {
      const auto r = check_recurrence(f, ell, 7, RecurrenceKind::Plain);
      REQUIRE(r.witness);
      for (Symbol a = 0; a < 2; ++a)
        CHECK(recurrent_at(f, ell, instantiate(*r.witness, a, ab()), RecurrenceKind::Weak));
      const auto s = check_proximality(f, f, ell, 7, ProximalityKind::Strong);
      REQUIRE(s.witness);
      CHECK(proximal_at(f, f, ell, *s.witness, ProximalityKind::Plain));
      for (Symbol a = 0; a < 2; ++a)
        CHECK(proximal_at(f, f, ell, instantiate(*s.witness, a, ab()), ProximalityKind::Weak));
    }
}

TEST_CASE("uniform recurrence gives recurrence") {
  const auto c = fixture::constant(6);
  const auto wc = ur_implies_recurrent_witness(c, 0, 1, 5);
  CHECK(wc.size() == 1);
  CHECK(wc.min_pos() >= 1);

  const auto par = fixture::parity(8);
  const auto wp = ur_implies_recurrent_witness(par, 0, 2, 6);
  CHECK(wp.size() % 2 == 0);
  CHECK(recurrent_at(par, 0, wp, RecurrenceKind::Plain));

  for (const auto& f : symbolic(8)) CHECK(recurrent_at(f, 1, ur_implies_recurrent_witness(f, 1, 3, 7), RecurrenceKind::Plain));

  const auto contains = Coloring::from_rule(ab(), 2, 6, Rule::contains_letter(0));
  try {
    ur_implies_recurrent_witness(contains, 0, 1, 5);
    FAIL("precondition not checked");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
}

TEST_CASE("orbit trees") {
  const auto c = fixture::constant(6);
  const auto tc = orbit_tree(c, 3, 6);
  for (const auto& level : tc.levels) CHECK(level.size() == 1);
  auto mc = minimal_check(tc, ab());
  REQUIRE(mc);
  CHECK(*mc == tc.levels);

  const auto par = fixture::parity(6);
  const auto tp = orbit_tree(par, 2, 5);
  for (const auto& level : tp.levels) CHECK(level.size() == 2);
  CHECK(subshift_check(tp.levels, ab()).holds);

  // every node has a witness within the bound
  for (unsigned ell = 0; ell < tp.levels.size(); ++ell)
    for (const auto& h : tp.levels[ell]) CHECK(is_factor(h, par, 5).has_value());

  // one-off irregularity at the unit is pruned
  const auto irr = Coloring::tabulate(ab(), 2, 4, [](const Word& x) { return Color(x.empty()); });
  const auto ti = orbit_tree(irr, 1, 3);
  auto mi = minimal_check(ti, ab());
  REQUIRE(mi);
  REQUIRE(mi->size() == 2);
  CHECK((*mi)[0] == std::vector<Factor>{Factor{0, {0}}});
  CHECK((*mi)[1] == std::vector<Factor>{Factor{1, {0, 0, 0}}});
  CHECK(subshift_check(*mi, ab()).holds);
  CHECK_FALSE(minimal_check(ti, ab(), 1).has_value());
}

TEST_CASE("minimal_check output is closed and inside the tree") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const auto f = fixture::random_table(rng, 2, 5);
    const auto t = orbit_tree(f, 2, 5);
    auto m = minimal_check(t, ab());
    REQUIRE(m);
    CHECK(subshift_check(*m, ab()).holds);
    for (std::size_t ell = 0; ell < m->size(); ++ell) {
      CHECK_FALSE((*m)[ell].empty());
      for (const auto& h : (*m)[ell])
        CHECK(std::find(t.levels[ell].begin(), t.levels[ell].end(), h) != t.levels[ell].end());
    }
  }
}

TEST_CASE("limits") {
  const auto c = fixture::constant(12);
  CHECK(flim_check(c, c, even_blocks(4, 12), 2, 0).holds);

  const auto par = fixture::parity(16);
  const auto x = even_blocks(4, 16);
  for (unsigned ell = 0; ell <= 3; ++ell) CHECK(flim_check(par, par, x, ell, 0).holds);

  std::vector<Word> odd;
  for (Position i = 4; i < 16; i += 2) odd.push_back(Word::singleton(i, 0));
  const auto bad = flim_check(par, par, WeakBlockSequence(odd), 1, 0);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample);
  CHECK(bad.counterexample->size() == 1);

  auto r = flim_search(par, x, 6, 4);
  REQUIRE(r);
  CHECK(r->g.window() == 6);
  for (unsigned ell = 0; ell <= 4; ++ell) {
    CHECK(flim_check(par, r->g, r->y, ell, r->offsets[ell]).holds);
    auto lw = flim_proximality_witness(*r, ell);
    REQUIRE(lw);
    CHECK(proximal_at(par, r->g, ell, lw->p, ProximalityKind::Weak));
    CHECK(shift_restrict(par, ell, unite(lw->p, lw->q)) == shift_restrict(r->g, ell, lw->p));
  }
  for (std::size_t i = 1; i < r->offsets.size(); ++i) CHECK(r->offsets[i - 1] <= r->offsets[i]);

  auto rc = flim_search(c, x, 4, 3);
  REQUIRE(rc);
  for (std::size_t i = 0; i < rc->g.table().size(); ++i) CHECK(rc->g.table()[i] == 0);
}

TEST_CASE("extraction from recurrence schedules") {
  for (const auto& f : symbolic(12)) {
    auto s = recurrence_schedule(f, 8, 11);
    REQUIRE(s);
    CHECK(verify_schedule(f, nullptr, *s).ok);
    const auto cert = extract_from_recurrent(f, *s, 3);
    CHECK(cert.color == f(Word{}));
    CHECK(cert.x.size() == 3);
    CHECK(verify_carlson(f, cert).ok);
  }

  const auto par = fixture::parity(12);
  auto s = *recurrence_schedule(par, 8, 11);
  auto gap = s;
  gap.entries.erase(gap.entries.begin() + 2);  // the walk visits 0, 2, 4, ...
  try {
    extract_from_recurrent(par, gap, 4);
    FAIL("gap not detected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ScheduleGap);
  }
  try {
    verify_schedule(par, nullptr, gap);
    FAIL("gap accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedCertificate);
  }

  auto unsound = s;
  unsound.entries[0].p = w("{0:*}");  // odd size flips parity
  try {
    extract_from_recurrent(par, unsound, 2);
    FAIL("unsound schedule accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerificationFailed);
  }
  CHECK_FALSE(verify_schedule(par, nullptr, unsound).ok);
}

TEST_CASE("extraction from proximality schedules") {
  for (const auto& f : symbolic(12)) {
    auto s = proximality_schedule(f, f, 8, 11);
    REQUIRE(s);
    CHECK(verify_schedule(f, &f, *s).ok);
    const auto [main, twin] = extract_from_proximal(f, f, *s, 3);
    CHECK(main.x == twin.x);
    CHECK(main.color == f(Word{}));
    CHECK(twin.color == f(Word{}));
    CHECK(verify_carlson(f, main).ok);
    CHECK(verify_carlson(f, twin).ok);
  }

  // With f = g every word is a weak and plain proximality witness, but odd
  // singletons break S^l(g) = S^l_{p[a]}(g).
  const auto par = fixture::parity(8);
  WitnessSchedule weak{ScheduleKind::StrongProximality, {{0, w("{0:*}")}, {1, w("{1:*}")}, {2, w("{2:*}")}}};
  for (const auto& e : weak.entries) CHECK(proximal_at(par, par, e.ell, e.p, ProximalityKind::Plain));
  try {
    extract_from_proximal(par, par, weak, 2);
    FAIL("weak-only schedule accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerificationFailed);
  }
  CHECK_FALSE(verify_schedule(par, &par, weak).ok);
}

TEST_CASE("strengthening proximality") {
  for (const auto& f : symbolic(10)) {
    for (unsigned ell = 0; ell <= 1; ++ell) {
      const auto p = strengthen_proximality(f, f, ell, ell + 2, 10);
      CHECK(classify(p, ab()) == WordKind::VariableWord);
      CHECK(p.min_pos() >= ell);
      CHECK(proximal_at(f, f, ell, p, ProximalityKind::Strong));
    }
  }
  const auto par = fixture::parity(10);
  CHECK(strengthen_proximality(par, par, 1, 3, 10).size() % 2 == 0);

  const auto contains = Coloring::from_rule(ab(), 2, 8, Rule::contains_letter(0));
  try {
    strengthen_proximality(contains, contains, 0, 1, 8);
    FAIL("precondition not checked");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionFailed);
  }
}
