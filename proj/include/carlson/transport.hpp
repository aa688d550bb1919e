#pragma once

// The canonical isomorphisms between naturals, finite sets, finite unions,
// located words and classical words, plus 2-apartness and the normalization
// of an increasing stream into a 2-apart FS-refinement.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carlson/spans.hpp"
#include "carlson/word.hpp"

namespace carlson {

FinSet nat_to_finset(std::uint64_t n);
std::uint64_t finset_to_nat(const FinSet& e);

struct ApartnessProfile {
  std::uint64_t n = 0;
  unsigned lambda = 0;  // least set bit
  unsigned mu = 0;      // greatest set bit
};

ApartnessProfile profile(std::uint64_t n);
/// mu of each element below lambda of the next. Zero entries are ZeroInput.
bool is_two_apart(std::span<const std::uint64_t> a);

/// Pull-based strictly increasing stream with a read budget.
class NatStream {
 public:
  using Source = std::function<std::uint64_t()>;

  NatStream(Source source, std::size_t budget) : source_(std::move(source)), budget_(budget) {}

  /// nullopt once the budget is spent. A non-increasing source is an
  /// InvalidArgument error.
  std::optional<std::uint64_t> next();
  std::size_t reads() const noexcept { return reads_; }
  /// Every element read so far, in order.
  const std::vector<std::uint64_t>& history() const noexcept { return history_; }

  static NatStream arithmetic(std::uint64_t start, std::uint64_t step, std::size_t budget);
  static NatStream powers_of_two(std::size_t budget);
  /// Gaps drawn uniformly from [1, max_gap].
  static NatStream random_gaps(std::uint64_t seed, std::uint64_t start, std::uint64_t max_gap, std::size_t budget);

 private:
  Source source_;
  std::size_t budget_;
  std::size_t reads_ = 0;
  std::vector<std::uint64_t> history_;
};

/// A finite set of stream elements together with their positions in the stream.
struct StreamBlock {
  FinSet indices;
  std::vector<std::uint64_t> elements;
  std::uint64_t sum = 0;
};

/// A nonempty block of unread stream elements whose sum has lambda >= k,
/// found by the doubling argument: two blocks with equal lambda merge into
/// one with larger lambda. nullopt means only that the budget ran out.
std::optional<StreamBlock> find_high_lambda(NatStream& x, unsigned k);

struct FSRefinement {
  std::vector<std::uint64_t> base;  // stream prefix consumed
  FinSetSequence blocks;            // indices into base
  std::vector<std::uint64_t> sums;
};

/// First `count` outputs of the normalization: F_0 = {min X}, then each
/// F_{n+1} taken past F_n with lambda(sum F_{n+1}) > mu(sum F_n).
std::optional<FSRefinement> normalize_two_apart(NatStream& x, std::size_t count);

/// iota(n) = sum of x_i over i in the binary expansion of n.
std::uint64_t iota_fs(std::span<const std::uint64_t> x, std::uint64_t n);
FinSet iota_fu(const FinSetSequence& x, const FinSet& e);
Word iota_located(const BlockSequence& x, const Word& q, const Alphabet& alphabet);

std::string collapse_to_words(const Word& p, const VariableWordList& ws, const Alphabet& alphabet);
/// Inverse of collapse for the dyadic list: splits u into constant runs of
/// increasing power-of-two lengths.
Word lift_from_words(std::string_view u, const Alphabet& alphabet);

}  // namespace carlson
