#include "carlson/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "carlson/hj.hpp"
#include "carlson/parallel.hpp"
#include "carlson/towsner.hpp"
#include "carlson/transport.hpp"
#include "carlson/verify.hpp"

namespace carlson {

namespace {

struct BudgetHit {};

std::vector<Word> words_between(const Alphabet& A, Position lo, Position hi, bool include_unit) {
  std::vector<Word> out;
  if (lo >= hi) {
    if (include_unit) out.emplace_back();
    return out;
  }
  for_each_word(A, lo, hi, include_unit, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

// Nonempty words (or variable words) in [lo, hi), canonical order.
void for_each_candidate(const Alphabet& A, Position lo, Position hi, bool variable,
                        const std::function<bool(const Word&)>& visit) {
  if (lo >= hi) return;
  if (variable) for_each_variable_word(A, lo, hi, visit);
  else for_each_word(A, lo, hi, false, visit);
}

void require_past(const Word& p, unsigned ell) {
  if (!p.empty() && p.min_pos() < ell)
    throw Error(Errc::PreconditionFailed, "shift word starts at " + std::to_string(p.min_pos()) + ", below level " +
                                              std::to_string(ell));
}

std::string level_text(unsigned ell) { return "level " + std::to_string(ell); }

}  // namespace

Factor shift_restrict(const Coloring& f, unsigned ell, const Word& p) {
  require_past(p, ell);
  const auto& A = f.alphabet();
  const auto size = table_size(A.size(), ell);
  Factor h{ell, {}};
  h.table.reserve(size);
  const unsigned n = f.window();
  if (ell <= n && (p.empty() || p.max_pos() < n)) {
    // q and p occupy disjoint digit ranges, so the index of q u p is a sum.
    const auto base = canonical_index(p, A, n);
    for (std::uint64_t i = 0; i < size; ++i) h.table.push_back(f.at_index(base + i));
    return h;
  }
  for (std::uint64_t i = 0; i < size; ++i) h.table.push_back(f(unite(word_from_index(i, A, ell), p)));
  return h;
}

Factor shift_restrict(const Factor& h, const Alphabet& alphabet, unsigned ell, const Word& p) {
  require_past(p, ell);
  if (ell > h.ell || (!p.empty() && p.max_pos() >= h.ell))
    throw Error(Errc::WindowOverflow, "shift leaves a factor of depth " + std::to_string(h.ell));
  const auto size = table_size(alphabet.size(), ell);
  const auto base = canonical_index(p, alphabet, h.ell);
  return Factor{ell, {h.table.begin() + static_cast<std::ptrdiff_t>(base),
                      h.table.begin() + static_cast<std::ptrdiff_t>(base + size)}};
}

Factor restrict(const Factor& h, const Alphabet& alphabet, unsigned ell) {
  return shift_restrict(h, alphabet, ell, Word{});
}

std::optional<Word> is_factor(const Factor& h, const Coloring& f, unsigned bound) {
  if (h.ell > bound) throw Error(Errc::InvalidArgument, "factor depth exceeds the bound");
  for (const auto& p : words_between(f.alphabet(), h.ell, bound, true))
    if (shift_restrict(f, h.ell, p) == h) return p;
  return std::nullopt;
}

bool recurrent_at(const Coloring& f, unsigned ell, const Word& p, RecurrenceKind kind) {
  const auto& A = f.alphabet();
  const Factor base = shift_restrict(f, ell, Word{});
  switch (kind) {
    case RecurrenceKind::Weak:
      return shift_restrict(f, ell, p) == base;
    case RecurrenceKind::Plain:
      if (classify(p, A) != WordKind::VariableWord) return false;
      for (Symbol a = 0; a < A.size(); ++a)
        if (shift_restrict(f, ell, instantiate(p, a, A)) != base) return false;
      return true;
    case RecurrenceKind::Uniform:
      break;
  }
  throw Error(Errc::InvalidArgument, "uniform recurrence has no single-word witness");
}

bool proximal_at(const Coloring& f, const Coloring& g, unsigned ell, const Word& p, ProximalityKind kind) {
  const auto& A = f.alphabet();
  if (!(A == g.alphabet())) throw Error(Errc::InvalidArgument, "colorings use different alphabets");
  if (kind == ProximalityKind::Weak) return shift_restrict(g, ell, p) == shift_restrict(f, ell, p);
  if (classify(p, A) != WordKind::VariableWord) return false;
  const Factor gbase = shift_restrict(g, ell, Word{});
  for (Symbol a = 0; a < A.size(); ++a) {
    const Word pa = instantiate(p, a, A);
    const Factor gs = shift_restrict(g, ell, pa);
    if (gs != shift_restrict(f, ell, pa)) return false;
    if (kind == ProximalityKind::Strong && gs != gbase) return false;
  }
  return true;
}

DynamicsReport check_recurrence(const Coloring& f, unsigned ell, unsigned bound, RecurrenceKind kind,
                                unsigned modulus) {
  const auto& A = f.alphabet();
  DynamicsReport r;
  if (kind == RecurrenceKind::Uniform) {
    if (modulus <= ell || modulus > bound)
      throw Error(Errc::InvalidArgument, "uniform recurrence needs level < modulus <= bound");
    const Factor base = shift_restrict(f, ell, Word{});
    const auto qs = words_between(A, ell, modulus, true);
    r.holds = true;
    for (const auto& p : words_between(A, modulus, bound, false)) {
      ++r.checked;
      const bool covered = std::any_of(qs.begin(), qs.end(),
                                       [&](const Word& q) { return shift_restrict(f, ell, unite(q, p)) == base; });
      if (!covered) {
        r.holds = false;
        r.counterexample = p;
        return r;
      }
    }
    return r;
  }
  for_each_candidate(A, ell, bound, kind == RecurrenceKind::Plain, [&](const Word& p) {
    ++r.checked;
    if (!recurrent_at(f, ell, p, kind)) return true;
    r.holds = true;
    r.witness = p;
    return false;
  });
  return r;
}

DynamicsReport check_proximality(const Coloring& f, const Coloring& g, unsigned ell, unsigned bound,
                                 ProximalityKind kind) {
  const auto& A = f.alphabet();
  DynamicsReport r;
  for_each_candidate(A, ell, bound, kind != ProximalityKind::Weak, [&](const Word& p) {
    ++r.checked;
    if (!proximal_at(f, g, ell, p, kind)) return true;
    r.holds = true;
    r.witness = p;
    return false;
  });
  return r;
}

Word ur_implies_recurrent_witness(const Coloring& f, unsigned ell, unsigned modulus, unsigned bound) {
  const auto& A = f.alphabet();
  const auto uniform = check_recurrence(f, ell, bound, RecurrenceKind::Uniform, modulus);
  if (!uniform.holds)
    throw Error(Errc::PreconditionFailed, "not uniformly recurrent at " + level_text(ell) + " with modulus " +
                                              std::to_string(modulus) + ": p = " +
                                              to_string(*uniform.counterexample, A) + " has no q");
  const Factor base = shift_restrict(f, ell, Word{});
  const auto qs = words_between(A, ell, modulus, true);
  // Color of v: the rank of the least q that brings pi_m(v) back to the base factor.
  ColorFunction g = [&](const Word& v) {
    const Word p = v.shifted(modulus);
    for (std::size_t j = 0; j < qs.size(); ++j)
      if (shift_restrict(f, ell, unite(qs[j], p)) == base) return static_cast<Color>(j);
    throw Error(Errc::PreconditionFailed, "no q for " + to_string(p, A));
  };
  auto line = hj_witness(g, A, 0, bound - modulus);
  if (!line) throw Error(Errc::WindowOverflow, "no monochromatic line below bound " + std::to_string(bound));
  Word w = unite(qs[line->color], line->p.shifted(modulus));
  if (!recurrent_at(f, ell, w, RecurrenceKind::Plain))
    throw Error(Errc::VerificationFailed, "constructed word " + to_string(w, A) + " is not a recurrence witness");
  return w;
}

OrbitTree orbit_tree(const Coloring& f, unsigned depth, unsigned bound) {
  if (depth > bound) throw Error(Errc::InvalidArgument, "orbit tree depth exceeds the bound");
  const auto& A = f.alphabet();
  OrbitTree t{depth, bound, {}};
  // Factors realized by nonempty shifts, per level; the tree condition asks
  // every shift of a node to be one of these.
  std::vector<std::set<Factor>> realized(depth + 1);
  std::vector<std::vector<Factor>> candidates(depth + 1);
  for (unsigned ell = 0; ell <= depth; ++ell) {
    const auto ps = words_between(A, ell, bound, true);
    std::vector<Factor> facs(ps.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ps.size()); ++i)
      facs[static_cast<std::size_t>(i)] = shift_restrict(f, ell, ps[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (!ps[i].empty()) realized[ell].insert(facs[i]);
    std::sort(facs.begin(), facs.end());
    facs.erase(std::unique(facs.begin(), facs.end()), facs.end());
    candidates[ell] = std::move(facs);
  }
  for (unsigned ell = 0; ell <= depth; ++ell) {
    std::vector<Factor> level;
    for (const auto& h : candidates[ell]) {
      bool ok = true;
      for (unsigned lo = 0; lo < ell && ok; ++lo)
        for (const auto& q : words_between(A, lo, ell, false))
          if (!realized[lo].count(shift_restrict(h, A, lo, q))) {
            ok = false;
            break;
          }
      if (ok) level.push_back(h);
    }
    t.levels.push_back(std::move(level));
  }
  return t;
}

DynamicsReport subshift_check(const std::vector<std::vector<Factor>>& levels, const Alphabet& alphabet, unsigned ell,
                              const Word& p) {
  if (levels.empty()) throw Error(Errc::EmptySet, "no levels to check");
  const auto top = static_cast<unsigned>(levels.size() - 1);
  if (ell > top) throw Error(Errc::InvalidArgument, "level past the deepest one");
  DynamicsReport r;
  r.holds = true;
  for (const auto& h : levels.back()) {
    ++r.checked;
    if (!std::binary_search(levels[ell].begin(), levels[ell].end(), shift_restrict(h, alphabet, ell, p))) {
      r.holds = false;
      r.counterexample = p;
      return r;
    }
  }
  return r;
}

DynamicsReport subshift_check(const std::vector<std::vector<Factor>>& levels, const Alphabet& alphabet) {
  if (levels.empty()) throw Error(Errc::EmptySet, "no levels to check");
  const auto top = static_cast<unsigned>(levels.size() - 1);
  DynamicsReport total;
  total.holds = true;
  for (unsigned ell = 0; ell <= top; ++ell) {
    for (const auto& p : words_between(alphabet, ell, top, true)) {
      auto r = subshift_check(levels, alphabet, ell, p);
      total.checked += r.checked;
      if (!r.holds) {
        r.checked = total.checked;
        return r;
      }
    }
  }
  return total;
}

std::optional<std::vector<std::vector<Factor>>> minimal_check(const OrbitTree& tree, const Alphabet& alphabet,
                                                              std::size_t budget) {
  const unsigned top = tree.depth;
  if (tree.levels.size() != top + 1) throw Error(Errc::InvalidArgument, "tree levels do not match its depth");
  const auto& nodes = tree.levels[top];
  // Intern every shift of every node; a family of nodes is then a set of
  // indices and "closed" is a statement about integers.
  std::map<Factor, std::size_t> ids;
  auto intern = [&](Factor h) { return ids.try_emplace(std::move(h), ids.size()).first->second; };
  std::vector<std::pair<unsigned, Word>> shifts;
  for (unsigned ell = 0; ell <= top; ++ell)
    for (auto& p : words_between(alphabet, ell, top, true)) shifts.emplace_back(ell, std::move(p));
  std::vector<std::vector<std::size_t>> image(nodes.size());
  std::vector<std::vector<std::size_t>> restriction(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& [ell, p] : shifts) {
      const auto id = intern(shift_restrict(nodes[i], alphabet, ell, p));
      image[i].push_back(id);
      if (p.empty()) restriction[i].push_back(id);
    }
  auto spend = [&]() {
    if (budget == 0) throw BudgetHit{};
    --budget;
  };
  // Largest closed subfamily of `alive`.
  auto close = [&](std::vector<std::size_t> alive) {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::set<std::size_t>> present(top + 1);
      for (auto i : alive)
        for (unsigned ell = 0; ell <= top; ++ell) present[ell].insert(restriction[i][ell]);
      std::vector<std::size_t> kept;
      for (auto i : alive) {
        bool ok = true;
        for (std::size_t j = 0; j < shifts.size() && ok; ++j) {
          spend();
          ok = present[shifts[j].first].count(image[i][j]) > 0;
        }
        if (ok) kept.push_back(i);
        else changed = true;
      }
      alive = std::move(kept);
    }
    return alive;
  };
  try {
    std::vector<std::size_t> all(nodes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto alive = close(all);
    // Sweep the factors in (level, table) order.
    std::vector<std::pair<unsigned, Factor>> order;
    for (unsigned ell = 0; ell <= top; ++ell)
      for (const auto& h : tree.levels[ell]) order.emplace_back(ell, h);
    for (const auto& [ell, h] : order) {
      auto it = ids.find(h);
      if (it == ids.end()) continue;  // no node has it, nothing to drop
      std::vector<std::size_t> rest;
      for (auto i : alive) {
        bool contains = false;
        for (std::size_t j = 0; j < shifts.size() && !contains; ++j) {
          spend();
          contains = shifts[j].first == ell && image[i][j] == it->second;
        }
        if (!contains) rest.push_back(i);
      }
      if (rest.size() == alive.size()) continue;
      rest = close(std::move(rest));
      if (!rest.empty()) alive = std::move(rest);
    }
    std::vector<std::vector<Factor>> out(top + 1);
    for (unsigned ell = 0; ell <= top; ++ell) {
      for (auto i : alive) out[ell].push_back(restrict(nodes[i], alphabet, ell));
      std::sort(out[ell].begin(), out[ell].end());
      out[ell].erase(std::unique(out[ell].begin(), out[ell].end()), out[ell].end());
    }
    return out;
  } catch (const BudgetHit&) {
    return std::nullopt;
  }
}

DynamicsReport flim_check(const Coloring& f, const Coloring& g, const WeakBlockSequence& x, unsigned ell,
                          std::size_t skip) {
  if (skip > x.size()) throw Error(Errc::IndexOutOfRange, "prefix longer than the sequence");
  const Factor base = shift_restrict(g, ell, Word{});
  DynamicsReport r;
  r.holds = true;
  for (const auto& p : weak_span(x.tail(skip), Arity::at_most(2))) {
    ++r.checked;
    if (shift_restrict(f, ell, p) != base) {
      r.holds = false;
      r.counterexample = p;
      return r;
    }
  }
  return r;
}

std::optional<FlimResult> flim_search(const Coloring& f, const WeakBlockSequence& x, unsigned target, std::size_t blocks,
                                      std::size_t budget) {
  const auto& A = f.alphabet();
  const std::size_t n = x.size();
  if (n == 0 || n > 20) throw Error(Errc::InvalidArgument, "flim search takes 1 to 20 blocks");
  if (blocks < 2 || blocks > n) throw Error(Errc::InvalidArgument, "need 2 <= blocks <= |X|");
  const std::uint64_t masks = std::uint64_t{1} << n;
  // pi: index set -> union of the members of X it names
  std::vector<Word> pi(masks);
  for (std::uint64_t mk = 1; mk < masks; ++mk) {
    const auto high = 63u - static_cast<unsigned>(__builtin_clzll(mk));
    pi[mk] = unite(pi[mk & ~(std::uint64_t{1} << high)], x[high]);
  }
  struct Label {
    unsigned ell;
    Factor h;
  };
  std::vector<Label> labels;
  std::vector<SetColoring> gs;
  for (unsigned ell = 0; ell <= target; ++ell) {
    std::vector<std::optional<Factor>> fac(masks);
    std::set<Factor> seen;
    for (std::uint64_t mk = 1; mk < masks; ++mk) {
      if (pi[mk].min_pos() < ell) continue;
      fac[mk] = shift_restrict(f, ell, pi[mk]);
      seen.insert(*fac[mk]);
    }
    for (const auto& h : seen) {
      std::vector<Color> table(masks, 0);
      for (std::uint64_t mk = 1; mk < masks; ++mk) table[mk] = fac[mk] && *fac[mk] == h ? 1 : 0;
      gs.push_back(SetColoring::from_table(2, static_cast<unsigned>(n), std::move(table)));
      labels.push_back({ell, h});
    }
  }
  std::vector<FinSet> singletons;
  for (std::size_t i = 0; i < n; ++i) singletons.push_back({static_cast<std::uint32_t>(i)});
  auto cert = fu_homog_search_iterated(gs, FinSetSequence(std::move(singletons)), blocks, Arity::at_most(2), 2, budget);
  if (!cert) return std::nullopt;
  std::vector<std::optional<std::size_t>> chosen(target + 1);
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (cert->colors[j] != 1) continue;
    auto& slot = chosen[labels[j].ell];
    if (slot)
      throw Error(Errc::AmbiguousLimit, "two factors stabilize at " + level_text(labels[j].ell));
    slot = j;
  }
  for (unsigned ell = 0; ell <= target; ++ell)
    if (!chosen[ell]) return std::nullopt;  // no tail reaches this level
  const Factor& top = labels[*chosen[target]].h;
  std::vector<std::size_t> offsets;
  for (unsigned ell = 0; ell <= target; ++ell) {
    if (restrict(top, A, ell) != labels[*chosen[ell]].h)
      throw Error(Errc::VerificationFailed, "limit factors are not nested at " + level_text(ell));
    offsets.push_back(cert->offsets[*chosen[ell]]);
  }
  std::vector<Word> ys;
  for (const auto& e : cert->y.items()) {
    std::uint64_t mk = 0;
    for (auto i : e) mk |= std::uint64_t{1} << i;
    ys.push_back(pi[mk]);
  }
  FlimResult out{Coloring::from_table(A, f.colors(), target, top.table), WeakBlockSequence(std::move(ys)),
                 std::move(offsets)};
  for (unsigned ell = 0; ell <= target; ++ell)
    if (!flim_check(f, out.g, out.y, ell, out.offsets[ell]).holds)
      throw Error(Errc::VerificationFailed, "limit fails its own check at " + level_text(ell));
  return out;
}

std::optional<LimitWitness> flim_proximality_witness(const FlimResult& r, unsigned ell) {
  const unsigned top = r.g.window();
  if (ell > top) return std::nullopt;
  const auto o = r.offsets[ell];
  if (o >= r.y.size()) return std::nullopt;
  const Word& p = r.y[o];
  const unsigned m = 1 + p.max_pos();
  if (m > top) return std::nullopt;
  const auto j = std::max(r.offsets[m], o + 1);
  if (j >= r.y.size()) return std::nullopt;
  return LimitWitness{p, r.y[j]};
}

namespace {

template <typename Find>
std::optional<WitnessSchedule> dense_schedule(ScheduleKind kind, unsigned last, Find find) {
  std::vector<std::optional<Word>> found(last + 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (std::int64_t ell = 0; ell <= static_cast<std::int64_t>(last); ++ell)
    found[static_cast<std::size_t>(ell)] = find(static_cast<unsigned>(ell));
  WitnessSchedule s{kind, {}};
  for (unsigned ell = 0; ell <= last; ++ell) {
    if (!found[ell]) return std::nullopt;
    s.entries.push_back({ell, std::move(*found[ell])});
  }
  return s;
}

std::vector<Word> follow_schedule(const Alphabet& A, const WitnessSchedule& sched, std::size_t m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "block count must be positive");
  std::vector<Word> blocks;
  unsigned ell = 0;
  while (blocks.size() < m) {
    const auto* e = sched.find(ell);
    if (!e) throw Error(Errc::ScheduleGap, "schedule has no witness for " + level_text(ell));
    if (classify(e->p, A) != WordKind::VariableWord || e->p.min_pos() < ell)
      throw Error(Errc::MalformedCertificate,
                  "witness " + to_string(e->p, A) + " is not a variable word past " + level_text(ell));
    blocks.push_back(e->p);
    ell = 1 + e->p.max_pos();
  }
  return blocks;
}

CarlsonCertificate checked_certificate(const Coloring& f, const std::vector<Word>& blocks, Color color,
                                       const std::string& side) {
  CarlsonCertificate c{f.content_hash(), BlockSequence(blocks), color, Arity::all(),
                       std::max(f.window(), 1 + blocks.back().max_pos())};
  const auto report = verify_carlson(f, c);
  if (!report.ok) throw Error(Errc::VerificationFailed, side + " certificate rejected: " + report.failure);
  return c;
}

}  // namespace

std::optional<WitnessSchedule> recurrence_schedule(const Coloring& f, unsigned last, unsigned bound) {
  return dense_schedule(ScheduleKind::Recurrence, last,
                        [&](unsigned ell) { return check_recurrence(f, ell, bound, RecurrenceKind::Plain).witness; });
}

std::optional<WitnessSchedule> proximality_schedule(const Coloring& f, const Coloring& g, unsigned last,
                                                    unsigned bound) {
  return dense_schedule(ScheduleKind::StrongProximality, last, [&](unsigned ell) {
    return check_proximality(f, g, ell, bound, ProximalityKind::Strong).witness;
  });
}

CarlsonCertificate extract_from_recurrent(const Coloring& f, const WitnessSchedule& sched, std::size_t m) {
  if (sched.kind != ScheduleKind::Recurrence) throw Error(Errc::InvalidArgument, "expected a recurrence schedule");
  const auto blocks = follow_schedule(f.alphabet(), sched, m);
  return checked_certificate(f, blocks, f(Word{}), "f-side");
}

std::pair<CarlsonCertificate, CarlsonCertificate> extract_from_proximal(const Coloring& f, const Coloring& g,
                                                                       const WitnessSchedule& sched, std::size_t m) {
  if (sched.kind != ScheduleKind::StrongProximality)
    throw Error(Errc::InvalidArgument, "expected a strong proximality schedule");
  if (!(f.alphabet() == g.alphabet())) throw Error(Errc::InvalidArgument, "colorings use different alphabets");
  const auto blocks = follow_schedule(f.alphabet(), sched, m);
  const Color color = g(Word{});
  auto twin = checked_certificate(g, blocks, color, "g-side");
  auto main = checked_certificate(f, blocks, color, "f-side");
  return {std::move(main), std::move(twin)};
}

Word strengthen_proximality(const Coloring& f, const Coloring& g, unsigned ell, unsigned modulus, unsigned bound) {
  const auto& A = f.alphabet();
  const auto uniform = check_recurrence(g, ell, bound, RecurrenceKind::Uniform, modulus);
  if (!uniform.holds)
    throw Error(Errc::PreconditionFailed, "g is not uniformly recurrent at " + level_text(ell) + " with modulus " +
                                              std::to_string(modulus) + " inside bound " + std::to_string(bound));
  const Factor base = shift_restrict(g, ell, Word{});
  const auto qs = words_between(A, ell, modulus, true);
  for (unsigned n = 1; modulus + n < bound; ++n) {
    const auto weak = check_proximality(f, g, modulus + n, bound, ProximalityKind::Weak);
    if (!weak.holds)
      throw Error(Errc::PreconditionFailed, "g is not weakly proximal to f past " + std::to_string(modulus + n) +
                                                " inside bound " + std::to_string(bound));
    const Word& p = *weak.witness;
    ColorFunction h = [&](const Word& v) {
      const Word vp = unite(v, p);
      for (std::size_t j = 0; j < qs.size(); ++j)
        if (shift_restrict(g, ell, unite(qs[j], vp)) == base) return static_cast<Color>(j);
      throw Error(Errc::PreconditionFailed, "no q for " + to_string(vp, A));
    };
    auto line = hj_witness(h, A, modulus, modulus + n);
    if (!line) continue;
    Word w = unite(unite(qs[line->color], line->p), p);
    if (!proximal_at(f, g, ell, w, ProximalityKind::Strong))
      throw Error(Errc::VerificationFailed, "assembled word " + to_string(w, A) + " is not strongly proximal");
    return w;
  }
  throw Error(Errc::WindowOverflow, "bound " + std::to_string(bound) + " leaves no room for the Hales-Jewett step");
}

}  // namespace carlson
