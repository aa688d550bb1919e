#include "carlson/io.hpp"

#include <fstream>
#include <sstream>

#include "carlson/error.hpp"

namespace carlson {

namespace {

constexpr const char* kColoringFormat = "carlson-coloring";
constexpr const char* kCertificateFormat = "carlson-certificate";

std::uint64_t fnv(std::string_view text, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : text) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::uint64_t parse_hash(const std::string& s) {
  if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw Error(Errc::MalformedCertificate, "bad hash '" + s + "'");
  return std::stoull(s, nullptr, 16);
}

Json words_json(std::span<const Word> ws, const Alphabet& A) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_string(w, A));
  return out;
}

std::vector<Word> words_from(const Json& j, const Alphabet& A) {
  std::vector<Word> out;
  for (const auto& s : j) out.push_back(parse_word(s.get<std::string>(), A));
  return out;
}

Json finsets_json(std::span<const FinSet> es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(e);
  return out;
}

std::vector<FinSet> finsets_from(const Json& j) {
  std::vector<FinSet> out;
  for (const auto& e : j) out.push_back(make_finset(e.get<std::vector<std::uint32_t>>()));
  return out;
}

std::string match_kind_name(MatchKind k) {
  switch (k) {
    case MatchKind::Half: return "half";
    case MatchKind::HalfAll: return "half-all";
    case MatchKind::Full: return "full";
  }
  return {};
}

MatchKind parse_match_kind(const std::string& s) {
  if (s == "half") return MatchKind::Half;
  if (s == "half-all") return MatchKind::HalfAll;
  if (s == "full") return MatchKind::Full;
  throw Error(Errc::MalformedCertificate, "unknown match kind '" + s + "'");
}

std::string schedule_kind_name(ScheduleKind k) {
  return k == ScheduleKind::Recurrence ? "recurrence" : "strong-proximality";
}

ScheduleKind parse_schedule_kind(const std::string& s) {
  if (s == "recurrence") return ScheduleKind::Recurrence;
  if (s == "strong-proximality") return ScheduleKind::StrongProximality;
  throw Error(Errc::MalformedCertificate, "unknown schedule kind '" + s + "'");
}

CertificateKind parse_certificate_kind(const std::string& s) {
  for (auto k : {CertificateKind::HJ, CertificateKind::Carlson, CertificateKind::Match, CertificateKind::Schedule,
                 CertificateKind::FU})
    if (to_string(k) == s) return k;
  throw Error(Errc::MalformedCertificate, "unknown certificate kind '" + s + "'");
}

}  // namespace

std::string to_string(Domain d) {
  switch (d) {
    case Domain::Located: return "located";
    case Domain::FinSets: return "finsets";
    case Domain::Naturals: return "naturals";
    case Domain::Words: return "words";
  }
  return {};
}

Domain parse_domain(std::string_view text) {
  for (auto d : {Domain::Located, Domain::FinSets, Domain::Naturals, Domain::Words})
    if (to_string(d) == text) return d;
  throw Error(Errc::ParseError, "unknown domain '" + std::string(text) + "'");
}

Color WordColoring::operator()(std::string_view u) const {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Symbol s = alphabet.parse(u[i]);
    if (s == kStar) throw Error(Errc::UnknownSymbol, "classical word to color contains the star");
    entries.push_back({static_cast<Position>(i), s});
  }
  return rule.evaluate(Word::from_entries(std::move(entries)));
}

std::uint64_t ColoringFile::content_hash() const {
  if (located) return located->content_hash();
  if (sets) return sets->content_hash();
  return fnv(to_string(words->rule, words->alphabet), fnv(words->alphabet.letters() + ":" +
                                                          std::to_string(words->colors)));
}

Json to_json(const Coloring& f) {
  Json j;
  j["format"] = kColoringFormat;
  j["domain"] = to_string(Domain::Located);
  j["alphabet"] = f.alphabet().letters();
  j["colors"] = f.colors();
  j["window"] = f.window();
  if (f.rule()) j["rule"] = to_string(*f.rule(), f.alphabet());
  else j["table"] = std::vector<Color>(f.table().begin(), f.table().end());
  return j;
}

Json to_json(const SetColoring& g, Domain domain) {
  if (domain != Domain::FinSets && domain != Domain::Naturals)
    throw Error(Errc::InvalidArgument, "set colorings are written over finsets or naturals");
  Json j;
  j["format"] = kColoringFormat;
  j["domain"] = to_string(domain);
  j["colors"] = g.colors();
  j["window"] = g.window();
  j["table"] = std::vector<Color>(g.table().begin(), g.table().end());
  return j;
}

Json to_json(const WordColoring& w) {
  Json j;
  j["format"] = kColoringFormat;
  j["domain"] = to_string(Domain::Words);
  j["alphabet"] = w.alphabet.letters();
  j["colors"] = w.colors;
  j["rule"] = to_string(w.rule, w.alphabet);
  return j;
}

ColoringFile coloring_from_json(const Json& j) {
  try {
    if (j.value("format", "") != kColoringFormat) throw Error(Errc::ParseError, "not a coloring file");
    ColoringFile out;
    out.domain = parse_domain(j.at("domain").get<std::string>());
    const auto colors = j.at("colors").get<unsigned>();
    switch (out.domain) {
      case Domain::Located: {
        Alphabet A(j.at("alphabet").get<std::string>());
        const auto window = j.at("window").get<unsigned>();
        if (j.contains("rule"))
          out.located = Coloring::from_rule(A, colors, window, parse_rule(j.at("rule").get<std::string>(), A));
        else
          out.located = Coloring::from_table(A, colors, window, j.at("table").get<std::vector<Color>>());
        break;
      }
      case Domain::FinSets:
      case Domain::Naturals:
        out.sets = SetColoring::from_table(colors, j.at("window").get<unsigned>(), j.at("table").get<std::vector<Color>>());
        break;
      case Domain::Words: {
        Alphabet A(j.at("alphabet").get<std::string>());
        out.words = WordColoring{A, colors, parse_rule(j.at("rule").get<std::string>(), A)};
        if (out.words->rule.color_bound() > colors) throw Error(Errc::ParseError, "rule produces too many colors");
        break;
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("coloring file: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(Errc::ParseError, std::string("coloring file: ") + e.what());
  }
}

std::uint64_t instance_hash(std::span<const SetColoring> gs) {
  if (gs.size() == 1) return gs[0].content_hash();
  std::uint64_t h = fnv("fu-family");
  for (const auto& g : gs) h = fnv(hash_string(g.content_hash()), h);
  return h;
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::HJ: return "hj";
    case CertificateKind::Carlson: return "carlson";
    case CertificateKind::Match: return "match";
    case CertificateKind::Schedule: return "schedule";
    case CertificateKind::FU: return "fu";
  }
  return {};
}

Json to_json(const CertificateFile& c) {
  Json j;
  j["format"] = kCertificateFormat;
  j["kind"] = to_string(c.kind);
  j["tool_version"] = c.tool_version;
  j["instance"] = hash_string(c.instance);
  if (c.partner) j["partner"] = hash_string(*c.partner);
  j["window"] = c.window;
  if (!c.alphabet.empty()) j["alphabet"] = c.alphabet;
  Json p;
  if (c.kind != CertificateKind::FU) {
    const Alphabet A(c.alphabet);
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, HJWitness>) {
            p["p"] = to_string(v.p, A);
            p["color"] = v.color;
          } else if constexpr (std::is_same_v<T, CarlsonCertificate>) {
            p["blocks"] = words_json(v.x.items(), A);
            p["color"] = v.color;
            p["arity"] = to_string(v.arity);
          } else if constexpr (std::is_same_v<T, MatchStructure>) {
            p["kind"] = match_kind_name(v.kind);
            p["color"] = v.color;
            p["f"] = words_json(v.f, A);
            p["y"] = words_json(v.y.items(), A);
          } else if constexpr (std::is_same_v<T, WitnessSchedule>) {
            p["kind"] = schedule_kind_name(v.kind);
            p["entries"] = Json::array();
            for (const auto& e : v.entries) p["entries"].push_back({{"ell", e.ell}, {"p", to_string(e.p, A)}});
          }
        },
        c.payload);
  } else {
    const auto& b = std::get<FuBundle>(c.payload);
    p["x"] = finsets_json(b.x.items());
    p["y"] = finsets_json(b.cert.y.items());
    p["arity"] = to_string(b.cert.arity);
    p["offsets"] = b.cert.offsets;
    p["colors"] = b.cert.colors;
  }
  j["payload"] = std::move(p);
  return j;
}

CertificateFile certificate_from_json(const Json& j) {
  try {
    if (j.value("format", "") != kCertificateFormat) throw Error(Errc::MalformedCertificate, "not a certificate file");
    CertificateFile c;
    c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
    c.tool_version = j.at("tool_version").get<std::string>();
    c.instance = parse_hash(j.at("instance").get<std::string>());
    if (j.contains("partner")) c.partner = parse_hash(j.at("partner").get<std::string>());
    c.window = j.at("window").get<unsigned>();
    const Json& p = j.at("payload");
    if (c.kind == CertificateKind::FU) {
      FuBundle b;
      b.x = FinSetSequence(finsets_from(p.at("x")));
      b.cert.y = FinSetSequence(finsets_from(p.at("y")));
      b.cert.arity = parse_arity(p.at("arity").get<std::string>());
      b.cert.offsets = p.at("offsets").get<std::vector<std::size_t>>();
      b.cert.colors = p.at("colors").get<std::vector<Color>>();
      c.payload = std::move(b);
      return c;
    }
    c.alphabet = j.at("alphabet").get<std::string>();
    const Alphabet A(c.alphabet);
    switch (c.kind) {
      case CertificateKind::HJ:
        c.payload = HJWitness{parse_word(p.at("p").get<std::string>(), A), p.at("color").get<Color>(), c.window};
        break;
      case CertificateKind::Carlson:
        c.payload = CarlsonCertificate{c.instance, BlockSequence(words_from(p.at("blocks"), A)),
                                       p.at("color").get<Color>(), parse_arity(p.at("arity").get<std::string>()),
                                       c.window};
        break;
      case CertificateKind::Match:
        c.payload = MatchStructure{words_from(p.at("f"), A), BlockSequence(words_from(p.at("y"), A)),
                                   parse_match_kind(p.at("kind").get<std::string>()), p.at("color").get<Color>()};
        break;
      case CertificateKind::Schedule: {
        WitnessSchedule s{parse_schedule_kind(p.at("kind").get<std::string>()), {}};
        for (const auto& e : p.at("entries"))
          s.entries.push_back({e.at("ell").get<unsigned>(), parse_word(e.at("p").get<std::string>(), A)});
        if (s.kind == ScheduleKind::StrongProximality && !c.partner)
          throw Error(Errc::MalformedCertificate, "strong proximality schedule without a partner hash");
        c.payload = std::move(s);
        break;
      }
      case CertificateKind::FU:
        break;
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedCertificate, e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedCertificate) throw;
    throw Error(Errc::MalformedCertificate, e.what());
  }
}

CertificateFile make_certificate(const Coloring& f, const HJWitness& w) {
  return {CertificateKind::HJ, f.content_hash(), std::nullopt, w.window, CARLSON_VERSION, f.alphabet().letters(), w};
}

CertificateFile make_certificate(const Coloring& f, const CarlsonCertificate& c) {
  return {CertificateKind::Carlson, c.coloring_hash, std::nullopt, c.window, CARLSON_VERSION, f.alphabet().letters(), c};
}

CertificateFile make_certificate(const Coloring& f, const MatchStructure& m) {
  return {CertificateKind::Match, f.content_hash(), std::nullopt, f.window(), CARLSON_VERSION, f.alphabet().letters(), m};
}

CertificateFile make_certificate(const Coloring& f, const Coloring* g, const WitnessSchedule& s, unsigned window) {
  std::optional<std::uint64_t> partner;
  if (g) partner = g->content_hash();
  return {CertificateKind::Schedule, f.content_hash(), partner, window, CARLSON_VERSION, f.alphabet().letters(), s};
}

CertificateFile make_certificate(std::span<const SetColoring> gs, const FinSetSequence& x, const FuCertificate& c) {
  const unsigned window = gs.empty() ? 0 : gs[0].window();
  return {CertificateKind::FU, instance_hash(gs), std::nullopt, window, CARLSON_VERSION, "", FuBundle{x, c}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << text;
}

std::vector<Word> parse_word_list(std::string_view text, const Alphabet& alphabet) {
  std::vector<Word> out;
  std::size_t at = 0;
  while (at < text.size()) {
    const char c = text[at];
    if (c == ' ' || c == ';' || c == ',' || c == '\t' || c == '\n') {
      ++at;
      continue;
    }
    if (c != '{') throw Error(Errc::ParseError, "expected '{' at offset " + std::to_string(at));
    const auto close = text.find('}', at);
    if (close == std::string_view::npos) throw Error(Errc::ParseError, "unterminated word");
    out.push_back(parse_word(text.substr(at, close - at + 1), alphabet));
    at = close + 1;
  }
  return out;
}

std::string to_string(std::span<const Word> words, const Alphabet& alphabet) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + to_string(w, alphabet);
  return s;
}

std::vector<FinSet> parse_finset_list(std::string_view text) {
  try {
    return finsets_from(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("set list: ") + e.what());
  }
}

std::string to_string(const FinSet& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

}  // namespace carlson
