#pragma once

// Thinness and matches as checkers on finite spans, bounded half-match and
// full-match searches, a desk-scale Carlson solver and the bounded
// finite-union searches.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "carlson/certificate.hpp"
#include "carlson/coloring.hpp"
#include "carlson/spans.hpp"

namespace carlson {

/// Outcome of a universal statement evaluated over a finite span.
struct CheckReport {
  bool holds = true;
  std::optional<Word> counterexample;  // least violating element
  std::size_t checked = 0;
};

/// Every p in [Y]_{A*} has a letter a with f(p[a]) != i.
CheckReport is_weakly_thin(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& y, Color i);
/// No q in [Y]_A has f(q) = i.
CheckReport is_thin(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& y, Color i);
/// The match condition of m over [m.y]_A. The counterexample is the failing q.
CheckReport check_match(const ColorFunction& f, const Alphabet& alphabet, const MatchStructure& m);

/// Search limits. `budget` caps coloring evaluations; exceeding it gives the
/// Exhausted outcome (an empty optional), never an error.
struct SearchOptions {
  std::size_t budget = 50'000'000;
  /// Shortest acceptable remainder Y of a match structure.
  std::size_t min_tail = 1;
  /// Length asked of weakly thin sequences built for thin reductions.
  std::size_t reduction_len = 3;
};

/// A thin block sequence of `target_len` members of [X]_{A*}, built one
/// block at a time from Hales-Jewett witnesses of the tuple coloring
/// p -> <f(q u iota(p)) : q in [F]_A u {unit}>. Throws NotWeaklyThin when X
/// is not weakly thin for i.
std::optional<BlockSequence> thin_refine(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& x,
                                         Color i, std::size_t target_len, const SearchOptions& options = {});

/// F half-matching Y for color i.
std::optional<MatchStructure> find_half_match(const ColorFunction& f, const Alphabet& alphabet, const BlockSequence& x,
                                              Color i, const SearchOptions& options = {});
/// F half-matching Y for every color occurring on [X]_A.
std::optional<MatchStructure> find_half_match_all(const ColorFunction& f, const Alphabet& alphabet,
                                                  const BlockSequence& x, const SearchOptions& options = {});

struct ThinReduction {
  Color color = 0;
  BlockSequence z;  // f-thin for color
};

using FullCaseResult = std::variant<MatchStructure, ThinReduction>;

/// One round of the full-match dichotomy: a full match, or a thin block
/// sequence for some color.
std::optional<FullCaseResult> find_full_match_case(const ColorFunction& f, const Alphabet& alphabet,
                                                   const BlockSequence& x, const SearchOptions& options = {});

struct FullMatchResult {
  MatchStructure match;
  std::vector<ThinReduction> reductions;  // in the order they were applied
};

/// Repeats find_full_match_case on each thin reduction until a full match
/// appears; every reduction removes a color from the span.
std::optional<FullMatchResult> find_full_match(const ColorFunction& f, const Alphabet& alphabet,
                                               const BlockSequence& x, const SearchOptions& options = {});

/// Least block sequence of m variable words inside [0, window) whose
/// arity-bounded span is monochromatic; window 0 means the whole table.
/// Blocks are compared in canonical order, first block first. The
/// certificate is re-verified before return.
std::optional<CarlsonCertificate> carlson_search(const Coloring& f, std::size_t m, Arity arity, unsigned window = 0);
std::optional<CarlsonCertificate> carlson_search_serial(const Coloring& f, std::size_t m, Arity arity,
                                                        unsigned window = 0);

/// Window growth: try start, start + step, ... up to cap. Returns the first
/// certificate found; nullopt when the cap is reached.
std::optional<CarlsonCertificate> carlson_search_growing(const Coloring& f, std::size_t m, Arity arity, unsigned start,
                                                         unsigned cap, unsigned step = 2);

/// Least Y of length m inside FU(X) (blocks ordered by their index sets)
/// with FU^{<=r}(Y) monochromatic.
std::optional<FuCertificate> fu_homog_search(const SetColoring& g, const FinSetSequence& x, std::size_t m, Arity arity,
                                             std::size_t budget = 50'000'000);

/// Least Y of length m inside FU(X) such that every coloring has an offset
/// o <= m - min_tail with FU^{<=r}(Y[o..]) monochromatic; offsets are least.
std::optional<FuCertificate> fu_homog_search_iterated(std::span<const SetColoring> gs, const FinSetSequence& x,
                                                      std::size_t m, Arity arity, std::size_t min_tail = 2,
                                                      std::size_t budget = 50'000'000);

}  // namespace carlson
