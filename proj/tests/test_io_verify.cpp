#include "doctest.h"

#include <random>

#include "carlson/dynamics.hpp"
#include "carlson/hj.hpp"
#include "carlson/io.hpp"
#include "carlson/towsner.hpp"
#include "carlson/verify.hpp"
#include "support.hpp"

using namespace carlson;
using fixture::ab;
using fixture::w;

namespace {

CertificateFile round_trip(const CertificateFile& c) {
  const auto text = dump(to_json(c));
  auto back = certificate_from_json(Json::parse(text));
  CHECK(dump(to_json(back)) == text);
  return back;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("coloring files round trip") {
  std::mt19937_64 rng(43);
  const auto t = fixture::random_table(rng, 3, 3);
  auto back = coloring_from_json(Json::parse(dump(to_json(t))));
  REQUIRE(back.located);
  CHECK(back.located->content_hash() == t.content_hash());
  CHECK(back.content_hash() == t.content_hash());

  const auto par = fixture::parity(5);
  auto rb = coloring_from_json(Json::parse(dump(to_json(par))));
  REQUIRE(rb.located);
  REQUIRE(rb.located->rule());
  CHECK(rb.located->content_hash() == par.content_hash());
  CHECK((*rb.located)(w("{40:a}")) == 1);

  const auto g = SetColoring::tabulate(2, 4, [](const FinSet& e) { return static_cast<Color>(e.size() % 2); });
  auto gb = coloring_from_json(Json::parse(dump(to_json(g, Domain::Naturals))));
  CHECK(gb.domain == Domain::Naturals);
  REQUIRE(gb.sets);
  CHECK(gb.sets->content_hash() == g.content_hash());

  const WordColoring wc{ab(), 2, Rule::letter_count_mod(0, 2)};
  auto wb = coloring_from_json(Json::parse(dump(to_json(wc))));
  REQUIRE(wb.words);
  CHECK((*wb.words)("aab") == 0);
  CHECK((*wb.words)("ab") == 1);
}

TEST_CASE("malformed coloring files") {
  auto j = to_json(fixture::parity(2));
  j.erase("rule");
  CHECK(code_of([&] { coloring_from_json(j); }) == Errc::ParseError);
  auto t = to_json(Coloring::from_table(ab(), 2, 1, {0, 1, 0}));
  t["table"] = Json::array({0, 1});
  CHECK(code_of([&] { coloring_from_json(t); }) == Errc::ParseError);
  t["table"] = Json::array({0, 1, 5});
  CHECK(code_of([&] { coloring_from_json(t); }) == Errc::ParseError);
  CHECK(code_of([&] { coloring_from_json(Json::parse(R"({"format":"other"})")); }) == Errc::ParseError);
}

TEST_CASE("every certificate kind round trips") {
  const auto par = fixture::parity(6);
  round_trip(make_certificate(par, *hj_witness(par)));
  const auto cc = *carlson_search(fixture::parity(4), 2, Arity::all());
  auto back = round_trip(make_certificate(fixture::parity(4), cc));
  CHECK(std::get<CarlsonCertificate>(back.payload).x == cc.x);

  const MatchStructure m{{w("{0:*,1:*}")}, BlockSequence({w("{2:*,3:*}")}), MatchKind::Full, 0};
  round_trip(make_certificate(par, m));
  const auto s = *recurrence_schedule(par, 3, 6);
  round_trip(make_certificate(par, nullptr, s, 6));
  const auto ps = *proximality_schedule(par, par, 2, 6);
  auto pb = round_trip(make_certificate(par, &par, ps, 6));
  CHECK(pb.partner == par.content_hash());

  const FinSetSequence x({{0}, {1}, {2}, {3}});
  const auto g = SetColoring::tabulate(2, 4, [](const FinSet& e) { return static_cast<Color>(e.size() % 2); });
  const SetColoring gs[] = {g};
  round_trip(make_certificate(gs, x, *fu_homog_search(g, x, 2, Arity::all())));
}

TEST_CASE("malformed certificates") {
  const auto f = fixture::parity(4);
  auto j = to_json(make_certificate(f, *carlson_search(f, 2, Arity::all())));
  auto broken = j;
  broken["kind"] = "nonsense";
  CHECK(code_of([&] { certificate_from_json(broken); }) == Errc::MalformedCertificate);
  broken = j;
  broken["payload"]["blocks"] = Json::array({"{2:*}", "{0:*}"});
  CHECK(code_of([&] { certificate_from_json(broken); }) == Errc::MalformedCertificate);
  broken = j;
  broken["instance"] = "xyz";
  CHECK(code_of([&] { certificate_from_json(broken); }) == Errc::MalformedCertificate);
  broken = j;
  broken.erase("payload");
  CHECK(code_of([&] { certificate_from_json(broken); }) == Errc::MalformedCertificate);
}

TEST_CASE("verify reports") {
  const auto f = fixture::parity(4);
  auto c = *carlson_search(f, 2, Arity::all());
  auto ok = verify_carlson(f, c);
  CHECK(ok.ok);
  CHECK(ok.obligations.size() == span_located(c.x, SpanMode::Letters, c.arity, ab()).size());

  auto tampered = c;
  tampered.color = 1;
  auto bad = verify_carlson(f, tampered);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failure.find(to_string(span_located(c.x, SpanMode::Letters, c.arity, ab()).front(), ab())) !=
        std::string::npos);

  auto other = c;
  other.coloring_hash ^= 1;
  CHECK(code_of([&] { verify_carlson(f, other); }) == Errc::HashMismatch);

  auto hw = *hj_witness(f);
  CHECK(verify_hj(f, hw).ok);
  hw.color ^= 1;
  CHECK_FALSE(verify_hj(f, hw).ok);

  const MatchStructure m{{w("{0:*}")}, BlockSequence({w("{1:*}"), w("{2:*}")}), MatchKind::Half, 0};
  CHECK_FALSE(verify_match(f, m).ok);

  auto s = *recurrence_schedule(fixture::parity(8), 4, 8);
  s.entries.pop_back();
  s.entries.erase(s.entries.begin() + 1);
  CHECK(code_of([&] { verify_schedule(fixture::parity(8), nullptr, s); }) == Errc::MalformedCertificate);
}

TEST_CASE("fu verification catches a set outside FU(X)") {
  const FinSetSequence x({{0, 1}, {2}, {3}});
  const auto g = SetColoring::tabulate(1, 4, [](const FinSet&) { return Color{0}; });
  const SetColoring gs[] = {g};
  FuCertificate c{FinSetSequence({{0}, {2}}), Arity::all(), {0}, {0}};
  CHECK_FALSE(verify_fu(gs, x, c).ok);
  c.y = FinSetSequence({{0, 1}, {2}});
  CHECK(verify_fu(gs, x, c).ok);
}

TEST_CASE("word lists and finite set lists parse") {
  const auto ws = parse_word_list("{0:*,1:a} {2:*};{3:b,4:*}", ab());
  REQUIRE(ws.size() == 3);
  CHECK(ws[2] == w("{3:b,4:*}"));
  CHECK(to_string(ws, ab()) == "{0:*,1:a} {2:*} {3:b,4:*}");
  CHECK(parse_finset_list("[[0,1],[3]]") == std::vector<FinSet>{{0, 1}, {3}});
  CHECK(to_string(FinSet{0, 2}) == "{0,2}");
}
