#include "carlson/towsner.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_map>

#include "carlson/hj.hpp"
#include "carlson/parallel.hpp"
#include "carlson/transport.hpp"
#include "carlson/verify.hpp"

namespace carlson {

namespace {

struct BudgetHit {};

// Counts coloring evaluations and aborts the search once the budget is gone.
class Meter {
 public:
  explicit Meter(std::size_t budget) : left_(budget) {}

  ColorFunction wrap(const ColorFunction& f) {
    return [this, &f](const Word& w) {
      if (left_ == 0) throw BudgetHit{};
      --left_;
      return f(w);
    };
  }

 private:
  std::size_t left_;
};

// Interns tuples of colors as fresh color ids.
class Interner {
 public:
  Color operator()(const std::vector<Color>& tuple) {
    auto [it, fresh] = ids_.try_emplace(tuple, static_cast<Color>(ids_.size()));
    return it->second;
  }

 private:
  std::map<std::vector<Color>, Color> ids_;
};

ColorFunction memoized(ColorFunction f) {
  auto cache = std::make_shared<std::unordered_map<Word, Color, WordHash>>();
  return [f = std::move(f), cache](const Word& w) {
    auto it = cache->find(w);
    if (it != cache->end()) return it->second;
    Color c = f(w);
    cache->emplace(w, c);
    return c;
  };
}

bool all_letters(const Alphabet& A, const Word& p, const std::function<bool(const Word&)>& pred) {
  for (Symbol a = 0; a < A.size(); ++a)
    if (!pred(instantiate(p, a, A))) return false;
  return true;
}

std::vector<Word> prefix_items(const BlockSequence& x, std::size_t n) {
  return {x.items().begin(), x.items().begin() + static_cast<std::ptrdiff_t>(std::min(n, x.size()))};
}

std::vector<Color> occurring_colors(const ColorFunction& f, const Alphabet& A, const BlockSequence& x) {
  std::vector<Color> colors;
  for (const auto& q : span_located(x, SpanMode::Letters, Arity::all(), A)) colors.push_back(f(q));
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

}  // namespace

CheckReport is_weakly_thin(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& y, Color i) {
  CheckReport report;
  for (const auto& p : span_located(y, SpanMode::WithStar, Arity::all(), alphabet)) {
    ++report.checked;
    if (all_letters(alphabet, p, [&](const Word& pa) { return f(pa) == i; })) {
      report.holds = false;
      report.counterexample = p;
      return report;
    }
  }
  return report;
}

CheckReport is_thin(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& y, Color i) {
  CheckReport report;
  for (const auto& q : span_located(y, SpanMode::Letters, Arity::all(), alphabet)) {
    ++report.checked;
    if (f(q) == i) {
      report.holds = false;
      report.counterexample = q;
      return report;
    }
  }
  return report;
}

CheckReport check_match(const ColorFunction& f, const Alphabet& alphabet, const MatchStructure& m) {
  for (const auto& p : m.f) {
    if (classify(p, alphabet) != WordKind::VariableWord)
      throw Error(Errc::InvalidArgument, "match set member " + to_string(p, alphabet) + " has no star");
    if (!m.y.empty() && !precedes(p, m.y[0]))
      throw Error(Errc::InvalidArgument, "match set member " + to_string(p, alphabet) + " does not precede Y");
  }
  CheckReport report;
  for (const auto& q : span_located(m.y, SpanMode::Letters, Arity::all(), alphabet)) {
    const Color fq = f(q);
    if (m.kind == MatchKind::Half && fq != m.color) continue;
    ++report.checked;
    const Color target = m.kind == MatchKind::Half ? m.color : fq;
    const bool absorbed = std::any_of(m.f.begin(), m.f.end(), [&](const Word& p) {
      return all_letters(alphabet, p, [&](const Word& pa) {
        return f(unite(pa, q)) == target && (m.kind != MatchKind::Full || f(pa) == target);
      });
    });
    if (!absorbed) {
      report.holds = false;
      report.counterexample = q;
      return report;
    }
  }
  return report;
}

namespace {

std::optional<BlockSequence> thin_refine_impl(const ColorFunction& f, const Alphabet& A, const BlockSequence& x,
                                              Color i, std::size_t target_len) {
  auto weak = is_weakly_thin(f, A, x, i);
  if (!weak.holds)
    throw Error(Errc::NotWeaklyThin, "every instantiation of " + to_string(*weak.counterexample, A) + " has color " +
                                         std::to_string(i));
  std::vector<Word> chosen;
  std::vector<Word> span_f;  // [F]_A
  BlockSequence rest = x;
  while (chosen.size() < target_len) {
    if (rest.empty()) return std::nullopt;
    std::vector<Word> members = span_f;
    members.insert(members.begin(), Word{});
    Interner intern;
    ColorFunction g = [&](const Word& p) {
      const Word image = iota_located(rest, p, A);
      std::vector<Color> tuple;
      tuple.reserve(members.size());
      for (const auto& q : members) tuple.push_back(f(unite(q, image)));
      return intern(tuple);
    };
    auto w = hj_witness(g, A, 0, static_cast<Position>(rest.size()));
    if (!w) return std::nullopt;
    Word qn = iota_located(rest, w->p, A);
    const auto old = span_f.size();
    for (Symbol a = 0; a < A.size(); ++a) {
      const Word qa = instantiate(qn, a, A);
      span_f.push_back(qa);
      for (std::size_t j = 0; j < old; ++j) span_f.push_back(unite(span_f[j], qa));
    }
    rest = rest.after(qn.max_pos());
    chosen.push_back(std::move(qn));
  }
  return BlockSequence(std::move(chosen));
}

// Case 2 of the half-match dichotomy restricted to prefixes: F = [X_0..X_{t-1}]_{A*}
// such that every r in [X - F]_A is absorbed into color i by some p in F.
std::optional<MatchStructure> half_match_by_prefix(const ColorFunction& f, const Alphabet& A, const BlockSequence& x,
                                                   Color i, std::size_t min_tail) {
  for (std::size_t t = 1; t + min_tail <= x.size(); ++t) {
    const auto fset = span_located(BlockSequence(prefix_items(x, t)), SpanMode::WithStar, Arity::all(), A);
    const auto rest = x.tail(t);
    bool works = true;
    for_each_span_element(rest.items(), SpanMode::Letters, Arity::all(), A, [&](const Word& r) {
      works = std::any_of(fset.begin(), fset.end(), [&](const Word& p) {
        return all_letters(A, p, [&](const Word& pb) { return f(unite(pb, r)) == i; });
      });
      return works;
    });
    if (works) return MatchStructure{fset, rest, MatchKind::Half, i};
  }
  return std::nullopt;
}

// Case 1: p_0 < p_1 < ... with letters a_n such that every p in
// [p_0..p_{n-1}]_{A*} has some b with f(p[b] u p_n[a_n]) != i; pairing
// p_{2n} u p_{2n+1}[a_{2n+1}] gives a weakly thin sequence, refined to a thin one.
std::optional<MatchStructure> half_match_by_thinning(const ColorFunction& f, const Alphabet& A, const BlockSequence& x,
                                                     Color i, std::size_t min_tail) {
  std::vector<Word> ps;
  std::vector<Symbol> letters;
  BlockSequence remaining = x;
  while (!remaining.empty()) {
    const auto span_p = ps.empty() ? std::vector<Word>{}
                                   : span_located(BlockSequence(ps), SpanMode::WithStar, Arity::all(), A);
    std::optional<std::pair<Word, Symbol>> next;
    for (const auto& q : span_located(remaining, SpanMode::WithStar, Arity::all(), A)) {
      for (Symbol a = 0; a < A.size() && !next; ++a) {
        const Word qa = instantiate(q, a, A);
        const bool good = std::all_of(span_p.begin(), span_p.end(), [&](const Word& p) {
          return !all_letters(A, p, [&](const Word& pb) { return f(unite(pb, qa)) == i; });
        });
        if (good) next.emplace(q, a);
      }
      if (next) break;
    }
    if (!next) break;
    remaining = remaining.after(next->first.max_pos());
    ps.push_back(std::move(next->first));
    letters.push_back(next->second);
  }
  std::vector<Word> paired;
  for (std::size_t n = 0; 2 * n + 1 < ps.size(); ++n)
    paired.push_back(unite(ps[2 * n], instantiate(ps[2 * n + 1], letters[2 * n + 1], A)));
  if (paired.size() < 1 + min_tail) return std::nullopt;
  const BlockSequence y(std::move(paired));
  for (std::size_t target = y.size(); target >= 1 + min_tail; --target) {
    if (auto z = thin_refine_impl(f, A, y, i, target)) {
      return MatchStructure{{(*z)[0]}, z->tail(1), MatchKind::Half, i};
    }
  }
  return std::nullopt;
}

std::optional<MatchStructure> half_match_impl(const ColorFunction& f, const Alphabet& A, const BlockSequence& x,
                                              Color i, std::size_t min_tail) {
  if (auto m = half_match_by_prefix(f, A, x, i, min_tail)) return m;
  return half_match_by_thinning(f, A, x, i, min_tail);
}

std::optional<MatchStructure> half_match_all_impl(const ColorFunction& f, const Alphabet& A, const BlockSequence& x,
                                                  std::size_t min_tail) {
  std::vector<Word> fs;
  BlockSequence y = x;
  for (Color i : occurring_colors(f, A, x)) {
    // A color that no longer occurs on [Y]_A is half-matched by nothing.
    const auto now = occurring_colors(f, A, y);
    if (!std::binary_search(now.begin(), now.end(), i)) continue;
    auto m = half_match_impl(f, A, y, i, min_tail);
    if (!m) return std::nullopt;
    fs.insert(fs.end(), m->f.begin(), m->f.end());
    y = std::move(m->y);
  }
  std::sort(fs.begin(), fs.end(), CanonicalLess{});
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return MatchStructure{std::move(fs), std::move(y), MatchKind::HalfAll, 0};
}

// Depth-first search for a block sequence inside [X]_{A*} of the given
// length that stays weakly thin for color i.
std::optional<BlockSequence> weakly_thin_sequence(const ColorFunction& f, const Alphabet& A, const BlockSequence& x,
                                                  Color i, std::size_t length) {
  std::vector<Word> chosen;
  std::function<bool(const BlockSequence&)> extend = [&](const BlockSequence& pool) {
    if (chosen.size() == length) return true;
    for (const auto& cand : span_located(pool, SpanMode::WithStar, Arity::all(), A)) {
      chosen.push_back(cand);
      if (is_weakly_thin(f, A, BlockSequence(chosen), i).holds && extend(pool.after(cand.max_pos()))) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(x)) return std::nullopt;
  return BlockSequence(chosen);
}

std::optional<FullCaseResult> full_case_impl(const ColorFunction& f, const Alphabet& A, const BlockSequence& x,
                                             const SearchOptions& options) {
  // Stage s holds F_1..F_s, Y_s and the coloring f_s.
  std::vector<std::vector<Word>> stages;
  BlockSequence y = x;
  ColorFunction fs = f;
  std::vector<Color> failing_colors;
  for (;;) {
    if (!stages.empty()) {
      // F = union of [p_1..p_s]_{A*} over chains p_t in F_t.
      std::vector<Word> fset;
      std::vector<Word> chain;
      std::function<void(std::size_t)> chains = [&](std::size_t t) {
        if (t == stages.size()) {
          auto part = span_located(BlockSequence(chain), SpanMode::WithStar, Arity::all(), A);
          fset.insert(fset.end(), part.begin(), part.end());
          return;
        }
        for (const auto& p : stages[t]) {
          chain.push_back(p);
          chains(t + 1);
          chain.pop_back();
        }
      };
      chains(0);
      std::sort(fset.begin(), fset.end(), CanonicalLess{});
      fset.erase(std::unique(fset.begin(), fset.end()), fset.end());
      MatchStructure candidate{std::move(fset), y, MatchKind::Full, 0};
      auto report = check_match(f, A, candidate);
      if (report.holds) return FullCaseResult{std::move(candidate)};
      failing_colors.push_back(f(*report.counterexample));
    }
    if (y.size() < 1 + options.min_tail) break;
    auto half = half_match_all_impl(fs, A, y, options.min_tail);
    if (!half || half->f.empty()) break;
    // f_{s+1}(q) = <least p in F_{s+1} absorbing q for f_s, f_s(q)>
    auto members = std::make_shared<std::vector<Word>>(half->f);
    auto intern = std::make_shared<Interner>();
    ColorFunction prev = fs;
    fs = memoized([members, intern, prev, &A](const Word& q) {
      const Color c = prev(q);
      Color which = static_cast<Color>(members->size());
      for (std::size_t j = 0; j < members->size(); ++j) {
        if (all_letters(A, (*members)[j], [&](const Word& pa) { return prev(unite(pa, q)) == c; })) {
          which = static_cast<Color>(j);
          break;
        }
      }
      return (*intern)({which, c});
    });
    stages.push_back(std::move(half->f));
    y = std::move(half->y);
  }
  if (failing_colors.empty()) return std::nullopt;
  // Most frequent failing color, least on ties.
  std::map<Color, std::size_t> tally;
  for (auto c : failing_colors) ++tally[c];
  std::vector<std::pair<std::size_t, Color>> ranked;
  for (auto [c, n] : tally) ranked.emplace_back(n, c);
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [n, i] : ranked) {
    for (std::size_t len = options.reduction_len; len >= 1 + options.min_tail; --len) {
      auto weak = weakly_thin_sequence(f, A, x, i, len);
      if (!weak) continue;
      if (auto z = thin_refine_impl(f, A, *weak, i, len)) return FullCaseResult{ThinReduction{i, std::move(*z)}};
    }
  }
  return std::nullopt;
}

template <typename T, typename Body>
std::optional<T> metered(const ColorFunction& f, std::size_t budget, Body body) {
  Meter meter(budget);
  const ColorFunction counted = meter.wrap(f);
  try {
    return body(counted);
  } catch (const BudgetHit&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<BlockSequence> thin_refine(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& x,
                                         Color i, std::size_t target_len, const SearchOptions& options) {
  return metered<BlockSequence>(f, options.budget,
                                [&](const ColorFunction& g) { return thin_refine_impl(g, alphabet, x, i, target_len); });
}

std::optional<MatchStructure> find_half_match(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& x,
                                              Color i, const SearchOptions& options) {
  auto m = metered<MatchStructure>(f, options.budget, [&](const ColorFunction& g) {
    return half_match_impl(g, alphabet, x, i, options.min_tail);
  });
  if (m && !check_match(f, alphabet, *m).holds)
    throw Error(Errc::VerificationFailed, "half match failed its own check");
  return m;
}

std::optional<MatchStructure> find_half_match_all(const ColorFunction& f, const Alphabet& alphabet,
                                                  const BlockSequence& x, const SearchOptions& options) {
  auto m = metered<MatchStructure>(f, options.budget, [&](const ColorFunction& g) {
    return half_match_all_impl(g, alphabet, x, options.min_tail);
  });
  if (m && !check_match(f, alphabet, *m).holds)
    throw Error(Errc::VerificationFailed, "half match failed its own check");
  return m;
}

std::optional<FullCaseResult> find_full_match_case(const ColorFunction& f, const Alphabet& alphabet,
                                                   const BlockSequence& x, const SearchOptions& options) {
  return metered<FullCaseResult>(f, options.budget,
                                 [&](const ColorFunction& g) { return full_case_impl(g, alphabet, x, options); });
}

std::optional<FullMatchResult> find_full_match(const ColorFunction& f, const Alphabet& alphabet,
                                               const BlockSequence& x, const SearchOptions& options) {
  auto result = metered<FullMatchResult>(f, options.budget, [&](const ColorFunction& g) -> std::optional<FullMatchResult> {
    FullMatchResult out;
    BlockSequence current = x;
    for (;;) {
      if (current.size() < 1 + options.min_tail) return std::nullopt;
      if (occurring_colors(g, alphabet, current).size() <= 1) {
        // One color left: the first block full-matches the rest.
        out.match = MatchStructure{{current[0]}, current.tail(1), MatchKind::Full, 0};
        return out;
      }
      auto step = full_case_impl(g, alphabet, current, options);
      if (!step) return std::nullopt;
      if (auto* m = std::get_if<MatchStructure>(&*step)) {
        out.match = std::move(*m);
        return out;
      }
      auto& reduction = std::get<ThinReduction>(*step);
      current = reduction.z;
      out.reductions.push_back(std::move(reduction));
    }
  });
  if (result && !check_match(f, alphabet, result->match).holds)
    throw Error(Errc::VerificationFailed, "full match failed its own check");
  return result;
}

// ---------------------------------------------------------------------------
// Carlson search by index arithmetic: the table index of a union of disjoint
// words is the sum of their indices, and line j instantiated by the letter of
// rank a has index fixed + (1 + a) * step.

namespace {

struct Lines {
  LineTable table;
  std::vector<Position> min_pos;
  std::vector<Position> max_pos;
};

unsigned window_limit(const Coloring& f, unsigned window) {
  if (window == 0) return f.window();
  if (window > f.window())
    throw Error(Errc::WindowOverflow, "search window " + std::to_string(window) + " past table window " +
                                          std::to_string(f.window()));
  return window;
}

Lines make_lines(const Coloring& f, unsigned window) {
  Lines l{line_table(f.alphabet().size(), window), {}, {}};
  for (std::size_t j = 0; j < l.table.size(); ++j) {
    const Word w = l.table.line(j);
    l.min_pos.push_back(w.min_pos());
    l.max_pos.push_back(w.max_pos());
  }
  return l;
}

struct SpanIndex {
  std::uint64_t index;
  unsigned blocks;
};

class CarlsonDfs {
 public:
  CarlsonDfs(const Coloring& f, const Lines& lines, std::size_t m, Arity arity)
      : table_(f.table()), lines_(lines), k_(f.alphabet().size()), m_(m), arity_(arity) {}

  // Completes a sequence starting with line `first`; fills chosen on success.
  bool run(std::size_t first, std::vector<std::size_t>& chosen) {
    chosen.clear();
    std::vector<SpanIndex> span;
    const auto& t = lines_.table;
    const Color c = table_[t.fixed[first] + t.step[first]];
    if (!extend(first, c, span)) return false;
    chosen.push_back(first);
    color_ = c;
    if (dfs(c, span, chosen)) return true;
    chosen.clear();
    return false;
  }

  Color color() const noexcept { return color_; }

 private:
  // Appends the span elements contributed by `line`, or fails on a color clash.
  bool extend(std::size_t line, Color c, std::vector<SpanIndex>& span) const {
    const auto& t = lines_.table;
    const auto old = span.size();
    for (std::size_t a = 0; a < k_; ++a) {
      const std::uint64_t e = t.fixed[line] + (1 + a) * t.step[line];
      if (table_[e] != c) {
        span.resize(old);
        return false;
      }
      span.push_back({e, 1});
      for (std::size_t s = 0; s < old; ++s) {
        if (!arity_.admits(span[s].blocks + 1)) continue;
        const std::uint64_t u = span[s].index + e;
        if (table_[u] != c) {
          span.resize(old);
          return false;
        }
        span.push_back({u, span[s].blocks + 1});
      }
    }
    return true;
  }

  bool dfs(Color c, std::vector<SpanIndex>& span, std::vector<std::size_t>& chosen) const {
    if (chosen.size() == m_) return true;
    const Position after = lines_.max_pos[chosen.back()];
    for (std::size_t j = 0; j < lines_.table.size(); ++j) {
      if (lines_.min_pos[j] <= after) continue;
      const auto old = span.size();
      if (!extend(j, c, span)) continue;
      chosen.push_back(j);
      if (dfs(c, span, chosen)) return true;
      chosen.pop_back();
      span.resize(old);
    }
    return false;
  }

  std::span<const Color> table_;
  const Lines& lines_;
  std::size_t k_;
  std::size_t m_;
  Arity arity_;
  Color color_ = 0;
};

CarlsonCertificate make_certificate(const Coloring& f, const Lines& lines, const std::vector<std::size_t>& chosen,
                                    Color color, Arity arity, unsigned window) {
  std::vector<Word> blocks;
  for (auto j : chosen) blocks.push_back(lines.table.line(j));
  CarlsonCertificate cert{f.content_hash(), BlockSequence(std::move(blocks)), color, arity, window};
  if (!verify_carlson(f, cert).ok) throw Error(Errc::VerificationFailed, "carlson certificate failed verification");
  return cert;
}

}  // namespace

std::optional<CarlsonCertificate> carlson_search(const Coloring& f, std::size_t m, Arity arity, unsigned window) {
  if (m == 0) throw Error(Errc::InvalidArgument, "block count must be positive");
  window = window_limit(f, window);
  const Lines lines = make_lines(f, window);
  const std::size_t n = lines.table.size();
  const int workers = worker_count();
  const std::size_t chunk = static_cast<std::size_t>(workers) * 4;
  for (std::size_t start = 0; start < n; start += chunk) {
    const std::size_t stop = std::min(n, start + chunk);
    std::vector<std::vector<std::size_t>> found(stop - start);
    std::vector<Color> colors(stop - start, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(stop - start); ++i) {
      CarlsonDfs dfs(f, lines, m, arity);
      std::vector<std::size_t> chosen;
      if (dfs.run(start + static_cast<std::size_t>(i), chosen)) {
        found[static_cast<std::size_t>(i)] = std::move(chosen);
        colors[static_cast<std::size_t>(i)] = dfs.color();
      }
    }
    for (std::size_t i = 0; i < found.size(); ++i)
      if (!found[i].empty()) return make_certificate(f, lines, found[i], colors[i], arity, window);
  }
  return std::nullopt;
}

std::optional<CarlsonCertificate> carlson_search_serial(const Coloring& f, std::size_t m, Arity arity,
                                                        unsigned window) {
  // Same order as the parallel kernel, but every color comes from evaluating
  // the coloring on explicit words.
  if (m == 0) throw Error(Errc::InvalidArgument, "block count must be positive");
  const auto& A = f.alphabet();
  window = window_limit(f, window);
  std::vector<Word> candidates;
  for_each_variable_word(A, 0, window, [&](const Word& p) {
    candidates.push_back(p);
    return true;
  });
  std::vector<Word> chosen;
  std::optional<Color> color;
  std::function<bool()> dfs = [&]() {
    if (chosen.size() == m) return true;
    for (const auto& cand : candidates) {
      if (!chosen.empty() && !precedes(chosen.back(), cand)) continue;
      chosen.push_back(cand);
      const auto span = span_located(BlockSequence(chosen), SpanMode::Letters, arity, A);
      const auto c = is_homogeneous(f, span);
      if (c && (!color || *c == *color)) {
        const bool fresh = !color;
        color = *c;
        if (dfs()) return true;
        if (fresh) color.reset();
      }
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  CarlsonCertificate cert{f.content_hash(), BlockSequence(chosen), *color, arity, window};
  if (!verify_carlson(f, cert).ok) throw Error(Errc::VerificationFailed, "carlson certificate failed verification");
  return cert;
}

std::optional<CarlsonCertificate> carlson_search_growing(const Coloring& f, std::size_t m, Arity arity, unsigned start,
                                                         unsigned cap, unsigned step) {
  if (start == 0 || step == 0) throw Error(Errc::InvalidArgument, "window growth needs positive start and step");
  for (unsigned n = start; n <= cap; n += step)
    if (auto c = carlson_search(f, m, arity, n)) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Finite-union searches. Candidate blocks of Y are nonempty sets of block
// indices of X, visited in increasing finset_to_nat order.

namespace {

struct FuSearch {
  const FinSetSequence& x;
  std::size_t m;
  Arity arity;
  std::size_t budget;
  std::vector<std::uint64_t> chosen;  // index masks

  std::vector<std::uint64_t> masks_after(std::uint64_t prev) const {
    std::vector<std::uint64_t> out;
    const std::size_t n = x.size();
    const unsigned low = prev == 0 ? 0u : 64u - static_cast<unsigned>(__builtin_clzll(prev));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
      if (static_cast<unsigned>(__builtin_ctzll(mask)) >= low) out.push_back(mask);
    return out;
  }

  FinSet expand(std::uint64_t mask) const {
    FinSet e;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mask >> i & 1) e.insert(e.end(), x[i].begin(), x[i].end());
    return e;
  }

  void spend() {
    if (budget == 0) throw BudgetHit{};
    --budget;
  }
};

// FU^{<=r} of masks[from..] as index masks with their block counts.
std::vector<std::pair<std::uint64_t, unsigned>> union_masks(std::span<const std::uint64_t> masks, Arity arity) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (auto mk : masks) {
    const auto old = out.size();
    out.emplace_back(mk, 1);
    for (std::size_t s = 0; s < old; ++s)
      if (arity.admits(out[s].second + 1)) out.emplace_back(out[s].first | mk, out[s].second + 1);
  }
  return out;
}

}  // namespace

std::optional<FuCertificate> fu_homog_search(const SetColoring& g, const FinSetSequence& x, std::size_t m, Arity arity,
                                             std::size_t budget) {
  if (m == 0) throw Error(Errc::InvalidArgument, "block count must be positive");
  if (x.size() >= 63) throw Error(Errc::Overflow, "too many blocks to search");
  FuSearch s{x, m, arity, budget, {}};
  // Unions already in the span with their block counts.
  std::vector<std::pair<std::uint64_t, unsigned>> span;
  std::optional<Color> color;
  std::function<bool()> dfs = [&]() {
    if (s.chosen.size() == m) return true;
    for (auto mk : s.masks_after(s.chosen.empty() ? 0 : s.chosen.back())) {
      s.spend();
      const auto old = span.size();
      const Color c = g(s.expand(mk));
      if (color && c != *color) continue;
      bool ok = true;
      span.emplace_back(mk, 1);
      for (std::size_t i = 0; i < old && ok; ++i) {
        if (!arity.admits(span[i].second + 1)) continue;
        const auto u = span[i].first | mk;
        ok = g(s.expand(u)) == c;
        span.emplace_back(u, span[i].second + 1);
      }
      if (ok) {
        const bool fresh = !color;
        color = c;
        s.chosen.push_back(mk);
        if (dfs()) return true;
        s.chosen.pop_back();
        if (fresh) color.reset();
      }
      span.resize(old);
    }
    return false;
  };
  try {
    if (!dfs()) return std::nullopt;
  } catch (const BudgetHit&) {
    return std::nullopt;
  }
  std::vector<FinSet> y;
  for (auto mk : s.chosen) y.push_back(s.expand(mk));
  return FuCertificate{FinSetSequence(std::move(y)), arity, {0}, {*color}};
}

std::optional<FuCertificate> fu_homog_search_iterated(std::span<const SetColoring> gs, const FinSetSequence& x,
                                                      std::size_t m, Arity arity, std::size_t min_tail,
                                                      std::size_t budget) {
  if (m == 0 || min_tail == 0 || min_tail > m) throw Error(Errc::InvalidArgument, "need 0 < min_tail <= m");
  if (x.size() >= 63) throw Error(Errc::Overflow, "too many blocks to search");
  FuSearch s{x, m, arity, budget, {}};
  std::vector<std::size_t> offsets(gs.size());
  std::vector<Color> colors(gs.size());
  // Least offset for each coloring; false when some coloring has none.
  auto settle = [&]() {
    for (std::size_t n = 0; n < gs.size(); ++n) {
      bool found = false;
      for (std::size_t o = 0; o + min_tail <= m && !found; ++o) {
        const auto unions = union_masks(std::span(s.chosen).subspan(o), arity);
        std::optional<Color> c;
        bool mono = true;
        for (const auto& [mk, cnt] : unions) {
          s.spend();
          const Color got = gs[n](s.expand(mk));
          if (c && got != *c) {
            mono = false;
            break;
          }
          c = got;
        }
        if (mono) {
          offsets[n] = o;
          colors[n] = *c;
          found = true;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  std::function<bool()> dfs = [&]() {
    if (s.chosen.size() == m) return settle();
    for (auto mk : s.masks_after(s.chosen.empty() ? 0 : s.chosen.back())) {
      s.spend();
      s.chosen.push_back(mk);
      if (dfs()) return true;
      s.chosen.pop_back();
    }
    return false;
  };
  try {
    if (!dfs()) return std::nullopt;
  } catch (const BudgetHit&) {
    return std::nullopt;
  }
  std::vector<FinSet> y;
  for (auto mk : s.chosen) y.push_back(s.expand(mk));
  return FuCertificate{FinSetSequence(std::move(y)), arity, std::move(offsets), std::move(colors)};
}

}  // namespace carlson
