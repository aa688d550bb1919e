// Command-line front end. Exit status: 0 success, 2 exhausted or refuted
// within the bound, 1 malformed input or a rejected certificate.

#include <cstdlib>
#include <functional>
#include <sstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "carlson/dynamics.hpp"
#include "carlson/hj.hpp"
#include "carlson/io.hpp"
#include "carlson/parallel.hpp"
#include "carlson/towsner.hpp"
#include "carlson/transport.hpp"
#include "carlson/verify.hpp"

namespace {

using namespace carlson;

constexpr int kOk = 0;
constexpr int kBad = 1;
constexpr int kExhausted = 2;

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) std::cout << text;
  else write_text_file(out, text);
}

ColoringFile load(const std::string& path) { return coloring_from_json(read_json_file(path)); }

Coloring load_located(const std::string& path) {
  auto file = load(path);
  if (!file.located) throw Error(Errc::InvalidArgument, path + " is not a located-word coloring");
  return std::move(*file.located);
}

SetColoring load_sets(const std::string& path) {
  auto file = load(path);
  if (!file.sets) throw Error(Errc::InvalidArgument, path + " is not a finite-set coloring");
  return std::move(*file.sets);
}

FinSetSequence singletons(unsigned n) {
  std::vector<FinSet> out;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back({i});
  return FinSetSequence(std::move(out));
}

Json report_json(const DynamicsReport& r, const Alphabet& A) {
  Json j;
  j["holds"] = r.holds;
  j["checked"] = r.checked;
  if (r.witness) j["witness"] = to_string(*r.witness, A);
  if (r.counterexample) j["counterexample"] = to_string(*r.counterexample, A);
  return j;
}

Json levels_json(const std::vector<std::vector<Factor>>& levels) {
  Json out = Json::array();
  for (const auto& level : levels) {
    Json l = Json::array();
    for (const auto& h : level) l.push_back(h.table);
    out.push_back(std::move(l));
  }
  return out;
}

struct Options {
  std::string coloring;
  std::vector<std::string> colorings;
  std::string partner;
  std::string out;
  std::string twin_out;
  std::string schedule;
  std::string certificate;
  std::string blocks_text;
  std::string x_text;
  std::string words_text;
  std::string rule;
  std::string domain = "located";
  std::string alphabet = "ab";
  std::string arity = "all";
  std::string kind;
  unsigned colors = 2;
  unsigned window = 0;
  unsigned max_window = 0;
  unsigned blocks = 2;
  unsigned level = 0;
  unsigned bound = 0;
  unsigned modulus = 0;
  unsigned depth = 0;
  unsigned target = 0;
  unsigned min_tail = 2;
  unsigned dyadic = 0;
  int last = -1;
  std::size_t budget = 50'000'000;
  std::uint64_t seed = 0;
  std::size_t letters = 2;
  bool random = false;
  bool minimal = false;
  bool list = false;
  std::uint64_t nat = 0;
  std::string set_text;
};

int cmd_gen(const Options& o) {
  const auto domain = parse_domain(o.domain);
  std::mt19937_64 rng(o.seed);
  if (!o.random && o.rule.empty()) throw Error(Errc::InvalidArgument, "gen needs --rule or --random");
  if (domain == Domain::Words) {
    if (o.random) throw Error(Errc::InvalidArgument, "word colorings are rule-only");
    Alphabet A(o.alphabet);
    emit(o.out, dump(to_json(WordColoring{A, o.colors, parse_rule(o.rule, A)})));
    return kOk;
  }
  if (domain == Domain::Located) {
    Alphabet A(o.alphabet);
    if (o.random)
      emit(o.out, dump(to_json(Coloring::tabulate(A, o.colors, o.window, [&](const Word&) {
        return static_cast<Color>(rng() % o.colors);
      }))));
    else
      emit(o.out, dump(to_json(Coloring::from_rule(A, o.colors, o.window, parse_rule(o.rule, A)))));
    return kOk;
  }
  // Finite sets: a rule reads E as the located word putting the first letter on E.
  Alphabet A(o.alphabet);
  std::optional<Rule> rule;
  if (!o.random) rule = parse_rule(o.rule, A);
  auto g = SetColoring::tabulate(o.colors, o.window, [&](const FinSet& e) {
    if (!rule) return static_cast<Color>(rng() % o.colors);
    std::vector<Entry> entries;
    for (auto i : e) entries.push_back({i, 0});
    return rule->evaluate(Word::from_entries(std::move(entries)));
  });
  emit(o.out, dump(to_json(g, domain)));
  return kOk;
}

int cmd_hj_search(const Options& o) {
  const auto f = load_located(o.coloring);
  auto w = hj_witness(f);
  if (!w) {
    std::cerr << "no monochromatic line inside window " << f.window() << "\n";
    return kExhausted;
  }
  emit(o.out, dump(to_json(make_certificate(f, *w))));
  return kOk;
}

int cmd_hj_number(const Options& o) {
  const auto r = hj_number(o.letters, o.colors, o.max_window);
  if (!r.value) {
    std::cerr << "every window up to " << o.max_window << " has a lineless coloring\n";
    return kExhausted;
  }
  std::cout << *r.value << "\n";
  return kOk;
}

int cmd_carlson(const Options& o) {
  const auto f = load_located(o.coloring);
  const unsigned start = o.window ? o.window : f.window();
  const unsigned cap = o.max_window ? o.max_window : start;
  auto c = carlson_search_growing(f, o.blocks, parse_arity(o.arity), start, cap);
  if (!c) {
    std::cerr << "no " << o.blocks << "-block solution up to window " << cap << "\n";
    return kExhausted;
  }
  emit(o.out, dump(to_json(make_certificate(f, *c))));
  return kOk;
}

int cmd_fut(const Options& o) {
  std::vector<SetColoring> gs;
  for (const auto& path : o.colorings) gs.push_back(load_sets(path));
  if (gs.empty()) throw Error(Errc::InvalidArgument, "fut needs at least one --coloring");
  const FinSetSequence x = o.x_text.empty() ? singletons(gs[0].window()) : FinSetSequence(parse_finset_list(o.x_text));
  const auto arity = parse_arity(o.arity);
  auto c = gs.size() == 1 ? fu_homog_search(gs[0], x, o.blocks, arity, o.budget)
                          : fu_homog_search_iterated(gs, x, o.blocks, arity, o.min_tail, o.budget);
  if (!c) {
    std::cerr << "no " << o.blocks << "-block solution within the budget\n";
    return kExhausted;
  }
  emit(o.out, dump(to_json(make_certificate(gs, x, *c))));
  return kOk;
}

int cmd_transport(const std::string& which, const Options& o) {
  auto file = load(o.coloring);
  if (which == "binary") {
    if (!file.sets) throw Error(Errc::InvalidArgument, "binary transport takes a finsets or naturals coloring");
    // finset_to_nat keys both tables, so only the reading changes.
    const auto to = file.domain == Domain::FinSets ? Domain::Naturals : Domain::FinSets;
    emit(o.out, dump(to_json(*file.sets, to)));
    return kOk;
  }
  if (which == "fu") {
    if (!file.sets) throw Error(Errc::InvalidArgument, "fu transport takes a finsets coloring");
    const FinSetSequence x(parse_finset_list(o.x_text));
    const auto& g = *file.sets;
    auto out = SetColoring::tabulate(g.colors(), static_cast<unsigned>(x.size()), [&](const FinSet& e) {
      return e.empty() ? g(e) : g(iota_fu(x, e));
    });
    emit(o.out, dump(to_json(out)));
    return kOk;
  }
  if (which == "located") {
    if (!file.located) throw Error(Errc::InvalidArgument, "located transport takes a located-word coloring");
    const auto& f = *file.located;
    const BlockSequence x(parse_word_list(o.blocks_text, f.alphabet()));
    auto out = Coloring::tabulate(f.alphabet(), f.colors(), static_cast<unsigned>(x.size()),
                                  [&](const Word& q) { return f(iota_located(x, q, f.alphabet())); });
    emit(o.out, dump(to_json(out)));
    return kOk;
  }
  // collapse
  if (!file.words) throw Error(Errc::InvalidArgument, "collapse transport takes a classical-word coloring");
  const auto& w = *file.words;
  std::vector<std::string> items;
  if (o.dyadic) {
    auto d = dyadic_word_list(o.dyadic, w.alphabet);
    items.assign(d.items().begin(), d.items().end());
  } else {
    std::stringstream ss(o.words_text);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) items.push_back(item);
  }
  const VariableWordList ws(items, w.alphabet);
  auto out = Coloring::tabulate(w.alphabet, w.colors, static_cast<unsigned>(ws.size()),
                                [&](const Word& p) { return w(collapse_to_words(p, ws, w.alphabet)); });
  emit(o.out, dump(to_json(out)));
  return kOk;
}

RecurrenceKind recurrence_kind(const std::string& s) {
  if (s == "weak") return RecurrenceKind::Weak;
  if (s == "plain" || s.empty()) return RecurrenceKind::Plain;
  if (s == "uniform") return RecurrenceKind::Uniform;
  throw Error(Errc::InvalidArgument, "unknown recurrence kind '" + s + "'");
}

ProximalityKind proximality_kind(const std::string& s) {
  if (s == "weak") return ProximalityKind::Weak;
  if (s == "plain") return ProximalityKind::Plain;
  if (s == "strong" || s.empty()) return ProximalityKind::Strong;
  throw Error(Errc::InvalidArgument, "unknown proximality kind '" + s + "'");
}

int cmd_recurrence(const Options& o) {
  const auto f = load_located(o.coloring);
  if (o.last >= 0) {
    auto s = recurrence_schedule(f, static_cast<unsigned>(o.last), o.bound);
    if (!s) {
      std::cerr << "some level up to " << o.last << " has no witness below " << o.bound << "\n";
      return kExhausted;
    }
    emit(o.out, dump(to_json(make_certificate(f, nullptr, *s, o.bound))));
    return kOk;
  }
  const auto r = check_recurrence(f, o.level, o.bound, recurrence_kind(o.kind), o.modulus);
  emit(o.out, dump(report_json(r, f.alphabet())));
  return r.holds ? kOk : kExhausted;
}

int cmd_proximality(const Options& o) {
  const auto f = load_located(o.coloring);
  const auto g = load_located(o.partner);
  if (o.last >= 0) {
    auto s = proximality_schedule(f, g, static_cast<unsigned>(o.last), o.bound);
    if (!s) {
      std::cerr << "some level up to " << o.last << " has no witness below " << o.bound << "\n";
      return kExhausted;
    }
    emit(o.out, dump(to_json(make_certificate(f, &g, *s, o.bound))));
    return kOk;
  }
  const auto r = check_proximality(f, g, o.level, o.bound, proximality_kind(o.kind));
  emit(o.out, dump(report_json(r, f.alphabet())));
  return r.holds ? kOk : kExhausted;
}

int cmd_orbit_tree(const Options& o) {
  const auto f = load_located(o.coloring);
  const auto t = orbit_tree(f, o.depth, o.bound);
  Json j;
  j["depth"] = t.depth;
  j["bound"] = t.bound;
  j["levels"] = levels_json(t.levels);
  if (o.minimal) {
    auto m = minimal_check(t, f.alphabet(), o.budget);
    if (!m) {
      std::cerr << "minimality sweep ran out of budget\n";
      return kExhausted;
    }
    j["minimal"] = levels_json(*m);
  }
  emit(o.out, dump(j));
  return kOk;
}

int cmd_flim(const Options& o) {
  const auto f = load_located(o.coloring);
  const WeakBlockSequence x(parse_word_list(o.blocks_text, f.alphabet()));
  auto r = flim_search(f, x, o.target, o.blocks, o.budget);
  if (!r) {
    std::cerr << "no stabilizing limit within the budget\n";
    return kExhausted;
  }
  Json j;
  j["y"] = Json::array();
  for (const auto& w : r->y.items()) j["y"].push_back(to_string(w, f.alphabet()));
  j["offsets"] = r->offsets;
  j["limit"] = to_json(r->g);
  emit(o.out, dump(j));
  return kOk;
}

int cmd_extract(const Options& o) {
  const auto f = load_located(o.coloring);
  const auto file = certificate_from_json(read_json_file(o.schedule));
  if (file.kind != CertificateKind::Schedule) throw Error(Errc::InvalidArgument, o.schedule + " is not a schedule");
  if (file.instance != f.content_hash()) throw Error(Errc::HashMismatch, "schedule is for another coloring");
  const auto& s = std::get<WitnessSchedule>(file.payload);
  if (s.kind == ScheduleKind::Recurrence) {
    emit(o.out, dump(to_json(make_certificate(f, extract_from_recurrent(f, s, o.blocks)))));
    return kOk;
  }
  if (o.partner.empty()) throw Error(Errc::InvalidArgument, "strong proximality extraction needs --partner");
  const auto g = load_located(o.partner);
  if (file.partner != g.content_hash()) throw Error(Errc::HashMismatch, "schedule names another partner");
  auto [main, twin] = extract_from_proximal(f, g, s, o.blocks);
  emit(o.out, dump(to_json(make_certificate(f, main))));
  if (!o.twin_out.empty()) write_text_file(o.twin_out, dump(to_json(make_certificate(g, twin))));
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto c = certificate_from_json(read_json_file(o.certificate));
  VerifyReport r;
  if (c.kind == CertificateKind::FU) {
    std::vector<SetColoring> gs;
    for (const auto& path : o.colorings) gs.push_back(load_sets(path));
    if (instance_hash(gs) != c.instance)
      throw Error(Errc::HashMismatch, "certificate is for instance " + hash_string(c.instance));
    const auto& b = std::get<FuBundle>(c.payload);
    r = verify_fu(gs, b.x, b.cert);
  } else {
    if (o.colorings.size() != 1) throw Error(Errc::InvalidArgument, "verify takes exactly one --coloring");
    const auto f = load_located(o.colorings[0]);
    if (f.content_hash() != c.instance)
      throw Error(Errc::HashMismatch, "certificate is for coloring " + hash_string(c.instance) + ", given " +
                                          hash_string(f.content_hash()));
    if (f.alphabet().letters() != c.alphabet) throw Error(Errc::MalformedCertificate, "alphabet differs");
    switch (c.kind) {
      case CertificateKind::HJ: r = verify_hj(f, std::get<HJWitness>(c.payload)); break;
      case CertificateKind::Carlson: r = verify_carlson(f, std::get<CarlsonCertificate>(c.payload)); break;
      case CertificateKind::Match: r = verify_match(f, std::get<MatchStructure>(c.payload)); break;
      case CertificateKind::Schedule: {
        std::optional<Coloring> g;
        if (c.partner) {
          if (o.partner.empty()) throw Error(Errc::InvalidArgument, "schedule names a partner; pass --partner");
          g = load_located(o.partner);
          if (g->content_hash() != *c.partner) throw Error(Errc::HashMismatch, "partner coloring differs");
        }
        r = verify_schedule(f, g ? &*g : nullptr, std::get<WitnessSchedule>(c.payload));
        break;
      }
      case CertificateKind::FU: break;
    }
  }
  if (o.list)
    for (const auto& line : r.obligations) std::cout << line << "\n";
  if (r.ok) {
    std::cout << "ok: " << r.obligations.size() << " obligations hold\n";
    return kOk;
  }
  std::cout << "rejected: " << r.failure << "\n";
  return kBad;
}

void configure_threads(int requested) {
  if (requested > 0) {
    set_worker_count(requested);
    return;
  }
  if (const char* env = std::getenv("CARLSON_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) set_worker_count(n);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Located-word Ramsey searches with checkable certificates"};
  app.set_version_flag("--version", std::string(CARLSON_VERSION));
  app.require_subcommand(1);
  Options o;
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: CARLSON_THREADS or all cores)");

  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default: stdout)"); };
  auto coloring_opt = [&](CLI::App* c) {
    c->add_option("--coloring", o.coloring, "coloring file")->required();
  };

  // Callbacks only pick the action; it runs after --threads is known.
  std::function<int()> action;
  auto run = [&](auto fn) { return [&action, fn]() { action = fn; }; };

  auto* gen = app.add_subcommand("gen", "write a coloring file");
  gen->add_option("--domain", o.domain, "located | finsets | naturals | words");
  gen->add_option("--alphabet", o.alphabet);
  gen->add_option("--colors", o.colors);
  gen->add_option("--window", o.window);
  gen->add_option("--rule", o.rule, "constant:c, dom-mod:k, letter-count-mod:a:k, contains:a, position-sum-mod:k");
  gen->add_flag("--random", o.random, "uniform random table");
  gen->add_option("--seed", o.seed);
  out_opt(gen);
  gen->callback(run([&] { return cmd_gen(o); }));

  auto* hj = app.add_subcommand("hj", "Hales-Jewett searches");
  hj->require_subcommand(1);
  auto* hjs = hj->add_subcommand("search", "least monochromatic line");
  coloring_opt(hjs);
  out_opt(hjs);
  hjs->callback(run([&] { return cmd_hj_search(o); }));
  auto* hjn = hj->add_subcommand("number", "least window forcing a line for every coloring");
  hjn->add_option("-k,--letters", o.letters)->required();
  hjn->add_option("-c,--colors", o.colors)->required();
  hjn->add_option("--max", o.max_window)->required();
  hjn->callback(run([&] { return cmd_hj_number(o); }));

  auto* carl = app.add_subcommand("carlson", "block sequence with a monochromatic span");
  coloring_opt(carl);
  carl->add_option("--blocks", o.blocks);
  carl->add_option("--arity", o.arity, "all or a bound r");
  carl->add_option("--window", o.window, "first search window (default: the table window)");
  carl->add_option("--max-window", o.max_window, "grow the window by 2 up to this cap");
  out_opt(carl);
  carl->callback(run([&] { return cmd_carlson(o); }));

  auto* fut = app.add_subcommand("fut", "finite-union search, iterated when several colorings are given");
  fut->add_option("--coloring", o.colorings, "finite-set coloring file (repeatable)")->required();
  fut->add_option("--x", o.x_text, "block list as JSON, e.g. [[0,1],[2]] (default: singletons)");
  fut->add_option("--blocks", o.blocks);
  fut->add_option("--arity", o.arity);
  fut->add_option("--min-tail", o.min_tail);
  fut->add_option("--budget", o.budget);
  out_opt(fut);
  fut->callback(run([&] { return cmd_fut(o); }));

  auto* tr = app.add_subcommand("transport", "pull a coloring back along an embedding");
  tr->require_subcommand(1);
  const std::pair<const char*, const char*> maps[] = {{"located", "along a located block sequence"},
                                                      {"fu", "along finite unions of a set sequence"},
                                                      {"binary", "between finite sets and naturals"},
                                                      {"collapse", "from classical words to located words"}};
  for (auto [which, help] : maps) {
    auto* sub = tr->add_subcommand(which, help);
    coloring_opt(sub);
    out_opt(sub);
    const std::string name = which;
    if (name == "located") sub->add_option("--blocks", o.blocks_text, "block sequence, e.g. \"{0:*} {1:a,2:*}\"")->required();
    if (name == "fu") sub->add_option("--x", o.x_text, "block list as JSON")->required();
    if (name == "collapse") {
      sub->add_option("--words", o.words_text, "comma-separated variable words");
      sub->add_option("--dyadic", o.dyadic, "use the all-star words of length 1, 2, 4, ...");
    }
    sub->callback([&, name] { action = [&o, name] { return cmd_transport(name, o); }; });
  }

  auto* dyn = app.add_subcommand("dynamics", "recurrence, proximality and limits on finite windows");
  dyn->require_subcommand(1);
  auto* rec = dyn->add_subcommand("recurrence", "check a recurrence kind per level, or write a schedule");
  coloring_opt(rec);
  rec->add_option("--level", o.level);
  rec->add_option("--bound", o.bound)->required();
  rec->add_option("--kind", o.kind, "weak | plain | uniform");
  rec->add_option("--modulus", o.modulus);
  rec->add_option("--last", o.last, "write a plain-recurrence schedule for levels 0..last");
  out_opt(rec);
  rec->callback(run([&] { return cmd_recurrence(o); }));
  auto* prox = dyn->add_subcommand("proximality", "check a proximality kind per level, or write a schedule");
  coloring_opt(prox);
  prox->add_option("--partner", o.partner)->required();
  prox->add_option("--level", o.level);
  prox->add_option("--bound", o.bound)->required();
  prox->add_option("--kind", o.kind, "weak | plain | strong");
  prox->add_option("--last", o.last, "write a strong-proximality schedule for levels 0..last");
  out_opt(prox);
  prox->callback(run([&] { return cmd_proximality(o); }));
  auto* orb = dyn->add_subcommand("orbit-tree", "shift factors found within the bound, level by level");
  coloring_opt(orb);
  orb->add_option("--depth", o.depth)->required();
  orb->add_option("--bound", o.bound)->required();
  orb->add_flag("--minimal", o.minimal, "also run the factor-exclusion sweep");
  orb->add_option("--budget", o.budget);
  out_opt(orb);
  orb->callback(run([&] { return cmd_orbit_tree(o); }));
  auto* fl = dyn->add_subcommand("flim", "finite-union limit along a weak block sequence");
  coloring_opt(fl);
  fl->add_option("--x", o.blocks_text, "weak block sequence, e.g. \"{4:a,5:b} {6:a,7:b}\"")->required();
  fl->add_option("--target", o.target)->required();
  fl->add_option("--blocks", o.blocks);
  fl->add_option("--budget", o.budget);
  out_opt(fl);
  fl->callback(run([&] { return cmd_flim(o); }));
  auto* ex = dyn->add_subcommand("extract", "turn a schedule certificate into a Carlson certificate");
  coloring_opt(ex);
  ex->add_option("--schedule", o.schedule)->required();
  ex->add_option("--partner", o.partner);
  ex->add_option("--blocks", o.blocks);
  ex->add_option("--twin-out", o.twin_out, "certificate for the partner coloring");
  out_opt(ex);
  ex->callback(run([&] { return cmd_extract(o); }));

  auto* ver = app.add_subcommand("verify", "re-check a certificate by enumeration");
  ver->add_option("certificate", o.certificate)->required();
  ver->add_option("--coloring", o.colorings, "coloring file (repeat for fu families)")->required();
  ver->add_option("--partner", o.partner);
  ver->add_flag("--list", o.list, "print every obligation");
  ver->callback(run([&] { return cmd_verify(o); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBad;
  }
  try {
    configure_threads(threads);
    return action ? action() : kBad;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBad;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBad;
  }
}
