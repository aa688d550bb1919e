#pragma once

// Shift-restriction factors of colorings and the recurrence / proximality /
// limit notions built on them, all evaluated on finite windows. Every
// existential over FIN_A(l, inf) is searched inside [l, bound); a negative
// answer only means "refuted within the bound".

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "carlson/certificate.hpp"
#include "carlson/coloring.hpp"
#include "carlson/spans.hpp"

namespace carlson {

/// A coloring of FIN_A(0, ell) plus the unit, keyed by canonical_index.
struct Factor {
  unsigned ell = 0;
  std::vector<Color> table;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// q -> f(q u p) on FIN_A(0, ell) plus the unit. Needs min dom p >= ell.
Factor shift_restrict(const Coloring& f, unsigned ell, const Word& p);
/// The same shift applied to a factor of depth >= ell; q u p must stay inside it.
Factor shift_restrict(const Factor& h, const Alphabet& alphabet, unsigned ell, const Word& p);
/// S^ell(h): the plain restriction.
Factor restrict(const Factor& h, const Alphabet& alphabet, unsigned ell);

/// Least p in {unit} u FIN_A(ell, bound) with S^ell_p(f) = h.
std::optional<Word> is_factor(const Factor& h, const Coloring& f, unsigned bound);

enum class RecurrenceKind { Weak, Plain, Uniform };
enum class ProximalityKind { Weak, Plain, Strong };

/// Outcome of a bounded dynamics check. For existential kinds `witness` is
/// the least witness; for uniform recurrence `counterexample` is the least p
/// with no compensating q.
struct DynamicsReport {
  bool holds = false;
  std::optional<Word> witness;
  std::optional<Word> counterexample;
  std::size_t checked = 0;
};

/// The defining equation of each kind at one candidate p (weak: p is a word;
/// plain: p is a variable word and every instantiation is checked).
bool recurrent_at(const Coloring& f, unsigned ell, const Word& p, RecurrenceKind kind);
bool proximal_at(const Coloring& f, const Coloring& g, unsigned ell, const Word& p, ProximalityKind kind);

/// Uniform(m) asks: every p in FIN_A(m, bound) has some q in {unit} u FIN_A(ell, m)
/// with S^ell_{q u p}(f) = S^ell(f). `modulus` is ignored for the other kinds.
DynamicsReport check_recurrence(const Coloring& f, unsigned ell, unsigned bound, RecurrenceKind kind,
                                unsigned modulus = 0);
DynamicsReport check_proximality(const Coloring& f, const Coloring& g, unsigned ell, unsigned bound,
                                 ProximalityKind kind);

/// The constructive step behind "uniformly recurrent implies recurrent": a
/// Hales-Jewett line for v -> least q with S^ell_{q u pi_m(v)}(f) = S^ell(f),
/// returned as w = q u pi_m(v). Throws PreconditionFailed when f is not
/// uniformly recurrent with this modulus inside the bound, WindowOverflow when
/// the bound leaves no room for a line.
Word ur_implies_recurrent_witness(const Coloring& f, unsigned ell, unsigned modulus, unsigned bound);

/// Levels 0..depth of the orbit tree, populated by the factors
/// S^ell_p(f), p in {unit} u FIN_A(ell, bound), that pass the tree condition.
struct OrbitTree {
  unsigned depth = 0;
  unsigned bound = 0;
  std::vector<std::vector<Factor>> levels;  // sorted, duplicate-free
};

OrbitTree orbit_tree(const Coloring& f, unsigned depth, unsigned bound);

/// Closure under shifts for the given levels: every S^ell_p(h), h a node of
/// the deepest level with p inside it, must be a node of level ell.
DynamicsReport subshift_check(const std::vector<std::vector<Factor>>& levels, const Alphabet& alphabet, unsigned ell,
                              const Word& p);
DynamicsReport subshift_check(const std::vector<std::vector<Factor>>& levels, const Alphabet& alphabet);

/// Factor-exclusion sweep over the finite tree: for each factor h in turn
/// (level by level, then by table), drop the nodes containing h whenever the
/// rest still forms a nonempty closed family. Returns the refined levels, or
/// nullopt when `budget` factor comparisons run out.
std::optional<std::vector<std::vector<Factor>>> minimal_check(const OrbitTree& tree, const Alphabet& alphabet,
                                                              std::size_t budget = 50'000'000);

/// Every p in [X - F]^{<=2}_A (F = the first `skip` members) has
/// S^ell_p(f) = S^ell(g). The counterexample is the least failing p.
DynamicsReport flim_check(const Coloring& f, const Coloring& g, const WeakBlockSequence& x, unsigned ell,
                          std::size_t skip);

struct FlimResult {
  Coloring g;                    // window = target level
  WeakBlockSequence y;           // members are unions of members of X
  std::vector<std::size_t> offsets;  // per level 0..target: F = first offsets[ell] members of Y
};

/// Finite run of the limit construction: X is transported to the index
/// singletons, each level's factors become the 2-colorings
/// C_h(F) = [min dom pi(F) >= ell and S^ell_{pi(F)}(f) = h], and the iterated
/// finite-union search picks Y. Throws AmbiguousLimit if two factors of one
/// level stabilize; nullopt is Exhausted.
std::optional<FlimResult> flim_search(const Coloring& f, const WeakBlockSequence& x, unsigned target, std::size_t blocks,
                                      std::size_t budget = 50'000'000);

/// The weak-proximality witness read off a limit: p is the first member of Y
/// past F_ell, q the first member past both p and F_{1 + max p}. The
/// argument gives S^ell_p(f) = S^ell_p(g). Nullopt when Y or the target level
/// is too short for the construction.
struct LimitWitness {
  Word p;
  Word q;
};
std::optional<LimitWitness> flim_proximality_witness(const FlimResult& r, unsigned ell);

/// Dense schedules of least witnesses for levels 0..last (plain recurrence
/// of f, strong proximality of g to f). Nullopt if some level is refuted
/// within the bound.
std::optional<WitnessSchedule> recurrence_schedule(const Coloring& f, unsigned last, unsigned bound);
std::optional<WitnessSchedule> proximality_schedule(const Coloring& f, const Coloring& g, unsigned last, unsigned bound);

/// m blocks p_0 < p_1 < ... where p_{n+1} is the schedule entry at
/// ell = 1 + max dom p_n. Throws ScheduleGap for a missing level and
/// VerificationFailed when the result is not homogeneous for f(unit).
CarlsonCertificate extract_from_recurrent(const Coloring& f, const WitnessSchedule& sched, std::size_t m);

/// The same induction for a strong-proximality schedule; both certificates
/// carry color g(unit), the first for f and the second for g.
std::pair<CarlsonCertificate, CarlsonCertificate> extract_from_proximal(const Coloring& f, const Coloring& g,
                                                                       const WitnessSchedule& sched, std::size_t m);

/// w = q u u[*] u p with S^ell(g) = S^ell_{w[a]}(g) = S^ell_{w[a]}(f) for all
/// letters: p a weak-proximality witness past modulus + N, u a Hales-Jewett
/// line in [modulus, modulus + N) for v -> least q with S^ell_{q u v u p}(g) = S^ell(g).
Word strengthen_proximality(const Coloring& f, const Coloring& g, unsigned ell, unsigned modulus, unsigned bound);

}  // namespace carlson
