#pragma once

// Witness records shared by the searches and the independent verifier.

#include <cstdint>
#include <optional>
#include <vector>

#include "carlson/spans.hpp"
#include "carlson/word.hpp"

namespace carlson {

struct HJWitness {
  Word p;  // located variable word
  Color color = 0;
  unsigned window = 0;

  friend bool operator==(const HJWitness&, const HJWitness&) = default;
};

struct CarlsonCertificate {
  std::uint64_t coloring_hash = 0;
  BlockSequence x;
  Color color = 0;
  Arity arity = Arity::all();
  unsigned window = 0;

  friend bool operator==(const CarlsonCertificate&, const CarlsonCertificate&) = default;
};

enum class MatchKind { Half, HalfAll, Full };

struct MatchStructure {
  std::vector<Word> f;  // located variable words, each before every block of y
  BlockSequence y;
  MatchKind kind = MatchKind::Full;
  Color color = 0;  // used by MatchKind::Half only

  friend bool operator==(const MatchStructure&, const MatchStructure&) = default;
};

enum class ScheduleKind {
  Recurrence,         // S^l_{p[a]}(f) = S^l(f)
  StrongProximality,  // S^l(g) = S^l_{p[a]}(g) = S^l_{p[a]}(f)
};

struct ScheduleEntry {
  unsigned ell = 0;
  Word p;  // located variable word with min dom >= ell

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// Per-level witnesses; entries are sorted by ell.
struct WitnessSchedule {
  ScheduleKind kind = ScheduleKind::Recurrence;
  std::vector<ScheduleEntry> entries;

  /// The entry for exactly this level, if present.
  const ScheduleEntry* find(unsigned ell) const {
    for (const auto& e : entries)
      if (e.ell == ell) return &e;
    return nullptr;
  }

  friend bool operator==(const WitnessSchedule&, const WitnessSchedule&) = default;
};

/// Y inside FU(X) with FU^{<=r} of each tail Y[offsets[n]..] homogeneous for
/// the n-th set coloring. The single search is the case of one coloring at
/// offset 0.
struct FuCertificate {
  FinSetSequence y;
  Arity arity = Arity::all();
  std::vector<std::size_t> offsets;
  std::vector<Color> colors;

  friend bool operator==(const FuCertificate&, const FuCertificate&) = default;
};

}  // namespace carlson
