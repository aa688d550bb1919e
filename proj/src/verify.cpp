#include "carlson/verify.hpp"

#include <algorithm>

namespace carlson {

namespace {

class Reporter {
 public:
  explicit Reporter(const Alphabet& alphabet) : alphabet_(alphabet) {}

  // Records "f(w) = c" and fails when c differs from expected.
  bool expect(const char* name, const Word& w, Color got, Color expected) {
    std::string line = std::string(name) + "(" + to_string(w, alphabet_) + ") = " + std::to_string(got);
    if (got != expected) line += " != " + std::to_string(expected);
    return record(std::move(line), got == expected);
  }

  bool record(std::string line, bool ok) {
    if (!ok && report_.ok) {
      report_.ok = false;
      report_.failure = line;
    }
    report_.obligations.push_back(std::move(line));
    return ok;
  }

  VerifyReport take() { return std::move(report_); }
  bool ok() const { return report_.ok; }

 private:
  const Alphabet& alphabet_;
  VerifyReport report_;
};

bool inside(const Word& w, unsigned window) { return w.empty() || w.max_pos() < window; }

}  // namespace

VerifyReport verify_hj(const Coloring& f, const HJWitness& w) {
  Reporter r(f.alphabet());
  if (classify(w.p, f.alphabet()) != WordKind::VariableWord) {
    r.record("witness " + to_string(w.p, f.alphabet()) + " is not a variable word", false);
    return r.take();
  }
  if (!r.record("dom " + to_string(w.p, f.alphabet()) + " inside [0," + std::to_string(f.window()) + ")",
                inside(w.p, f.window())))
    return r.take();
  for (Symbol a = 0; a < f.alphabet().size(); ++a) r.expect("f", instantiate(w.p, a, f.alphabet()), f(instantiate(w.p, a, f.alphabet())), w.color);
  return r.take();
}

VerifyReport verify_carlson(const Coloring& f, const CarlsonCertificate& c) {
  if (c.coloring_hash != f.content_hash())
    throw Error(Errc::HashMismatch, "certificate is for coloring " + hash_string(c.coloring_hash) + ", given " +
                                        hash_string(f.content_hash()));
  Reporter r(f.alphabet());
  if (c.x.empty()) {
    r.record("block sequence is empty", false);
    return r.take();
  }
  // a symbolic rule colors every word, so only table colorings bound the blocks
  if (!f.rule() &&
      !r.record("blocks inside [0," + std::to_string(f.window()) + ")", inside(c.x[c.x.size() - 1], f.window())))
    return r.take();
  for (const auto& q : span_located(c.x, SpanMode::Letters, c.arity, f.alphabet())) r.expect("f", q, f(q), c.color);
  return r.take();
}

VerifyReport verify_match(const Coloring& f, const MatchStructure& m) {
  const auto& A = f.alphabet();
  Reporter r(A);
  for (const auto& p : m.f) {
    if (classify(p, A) != WordKind::VariableWord) {
      r.record("F member " + to_string(p, A) + " is not a variable word", false);
      return r.take();
    }
    if (!m.y.empty() && !precedes(p, m.y[0])) {
      r.record("F member " + to_string(p, A) + " does not precede Y", false);
      return r.take();
    }
  }
  for (const auto& q : span_located(m.y, SpanMode::Letters, Arity::all(), A)) {
    const Color fq = f(q);
    if (m.kind == MatchKind::Half && fq != m.color) continue;
    const Color target = m.kind == MatchKind::Half ? m.color : fq;
    bool found = false;
    std::string used;
    for (const auto& p : m.f) {
      bool good = true;
      for (Symbol a = 0; a < A.size() && good; ++a) {
        const Word pa = instantiate(p, a, A);
        good = f(unite(pa, q)) == target && (m.kind != MatchKind::Full || f(pa) == target);
      }
      if (good) {
        found = true;
        used = to_string(p, A);
        break;
      }
    }
    r.record("q = " + to_string(q, A) + " (color " + std::to_string(fq) + ") absorbed by " + (found ? used : "nothing"),
             found);
  }
  return r.take();
}

namespace {

// S^l_p(c) as a table over FIN_A(0, l) u {unit} in canonical order.
std::vector<Color> factor(const Coloring& c, unsigned ell, const Word& p) {
  std::vector<Color> out;
  for_each_word(c.alphabet(), 0, ell, true, [&](const Word& q) {
    out.push_back(c(unite(q, p)));
    return true;
  });
  return out;
}

}  // namespace

VerifyReport verify_schedule(const Coloring& f, const Coloring* g, const WitnessSchedule& s) {
  const auto& A = f.alphabet();
  if (s.kind == ScheduleKind::StrongProximality && g == nullptr)
    throw Error(Errc::InvalidArgument, "strong proximality schedule needs the partner coloring");
  for (std::size_t i = 0; i < s.entries.size(); ++i)
    if (s.entries[i].ell != i)
      throw Error(Errc::MalformedCertificate, "schedule has no entry for level " + std::to_string(i));
  Reporter r(A);
  for (const auto& e : s.entries) {
    const std::string at = "level " + std::to_string(e.ell) + ", p = " + to_string(e.p, A);
    if (!r.record(at + " is a variable word past the level",
                  classify(e.p, A) == WordKind::VariableWord && e.p.min_pos() >= e.ell))
      continue;
    const auto& base = s.kind == ScheduleKind::Recurrence ? f : *g;
    const auto target = factor(base, e.ell, Word{});
    for (Symbol a = 0; a < A.size(); ++a) {
      const Word pa = instantiate(e.p, a, A);
      if (s.kind == ScheduleKind::Recurrence) {
        r.record(at + ": S_p[" + A.render(a) + "](f) = S(f)", factor(f, e.ell, pa) == target);
      } else {
        r.record(at + ": S_p[" + A.render(a) + "](g) = S(g)", factor(*g, e.ell, pa) == target);
        r.record(at + ": S_p[" + A.render(a) + "](f) = S_p[" + A.render(a) + "](g)",
                 factor(f, e.ell, pa) == factor(*g, e.ell, pa));
      }
    }
  }
  return r.take();
}

VerifyReport verify_fu(std::span<const SetColoring> gs, const FinSetSequence& x, const FuCertificate& c) {
  Alphabet dummy("a");
  Reporter r(dummy);
  auto show = [](const FinSet& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + "}";
  };
  if (gs.size() != c.offsets.size() || gs.size() != c.colors.size())
    throw Error(Errc::MalformedCertificate, "one offset and one color per coloring expected");
  // Every set of Y must be a union of blocks of X.
  for (const auto& e : c.y.items()) {
    FinSet rebuilt;
    for (const auto& b : x.items())
      if (std::includes(e.begin(), e.end(), b.begin(), b.end())) rebuilt.insert(rebuilt.end(), b.begin(), b.end());
    std::sort(rebuilt.begin(), rebuilt.end());
    r.record(show(e) + " is a union of blocks of X", rebuilt == e);
  }
  if (!r.ok()) return r.take();
  for (std::size_t n = 0; n < gs.size(); ++n) {
    if (c.offsets[n] >= c.y.size()) {
      r.record("coloring " + std::to_string(n) + ": offset leaves an empty tail", false);
      continue;
    }
    std::vector<FinSet> tail(c.y.items().begin() + static_cast<std::ptrdiff_t>(c.offsets[n]), c.y.items().end());
    for (const auto& e : finite_unions(FinSetSequence(tail), c.arity)) {
      const Color got = gs[n](e);
      std::string line = "g" + std::to_string(n) + "(" + show(e) + ") = " + std::to_string(got);
      if (got != c.colors[n]) line += " != " + std::to_string(c.colors[n]);
      r.record(std::move(line), got == c.colors[n]);
    }
  }
  return r.take();
}

}  // namespace carlson
