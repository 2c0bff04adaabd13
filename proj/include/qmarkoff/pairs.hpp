#pragma once

// Patterns over finite supports, occurrence differences between two
// sequences that differ in finitely many places, and the indistinguishable
// pair built from a central factorization ~p x.y p.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qmarkoff/language.hpp"
#include "qmarkoff/words.hpp"

namespace qmarkoff {

struct Pattern {
  std::vector<std::int64_t> support;  // strictly increasing
  std::vector<Letter> letters;        // letters[k] sits at support[k]

  /// Sorts the support; throws PreconditionError on a repeated position or
  /// a size mismatch.
  static Pattern make(std::vector<std::pair<std::int64_t, Letter>> cells);
  /// `w` placed on the contiguous support first .. first+|w|-1.
  static Pattern contiguous(std::int64_t first, const BinaryWord& w);

  Pattern shifted(std::int64_t by) const;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Letters at positions first .. first+count-1.
using WindowFn = std::function<BinaryWord(std::int64_t first, std::size_t count)>;

/// s is given by a window generator; t is s with every letter in the
/// difference set flipped, so the two disagree exactly there.
class AsymptoticPair {
 public:
  AsymptoticPair(WindowFn s, std::vector<std::int64_t> difference_set);

  BinaryWord s_window(std::int64_t first, std::size_t count) const;
  BinaryWord t_window(std::int64_t first, std::size_t count) const;
  const std::vector<std::int64_t>& difference_set() const { return diff_; }

  /// Same pair with s and t exchanged.
  AsymptoticPair swapped() const;
  /// Both sequences read from position `by` on: (σ^by s, σ^by t).
  AsymptoticPair shifted(std::int64_t by) const;

 private:
  WindowFn s_;
  std::vector<std::int64_t> diff_;  // sorted, unique
};

/// (#(occ_p(s) \ occ_p(t)), #(occ_p(t) \ occ_p(s))). Only shifts n with
/// (n + support) meeting the difference set can contribute.
std::pair<std::size_t, std::size_t> occ_diff(const AsymptoticPair& pair, const Pattern& p);

struct IndistinguishabilityReport {
  std::size_t radius = 0;
  std::size_t supports_checked = 0;
  std::size_t patterns_checked = 0;
  bool holds = true;
  std::optional<Pattern> witness;  // first pattern with unequal counts
  std::pair<std::size_t, std::size_t> witness_counts{0, 0};
};

/// Every pattern on a contiguous support inside [-radius, radius] that
/// occurs at a shift touching the difference set. Throws
/// PreconditionError when radius is 0.
IndistinguishabilityReport is_indistinguishable_up_to(const AsymptoticPair& pair, std::size_t radius);

/// Same check over every nonempty support S ⊆ [-radius, radius]; the cost is
/// exponential in 2*radius+1 so radius is capped at 6.
IndistinguishabilityReport is_indistinguishable_bruteforce(const AsymptoticPair& pair, std::size_t radius);

/// s = σ^{-n0} of ~p x.y p and t = the same with x.y swapped; difference
/// set {n0-1, n0}. Throws PreconditionError("no central factorization")
/// for periodic and mechanical specs.
AsymptoticPair build_pair(const BalancedSpec& spec, std::int64_t n0 = 0);

/// The spec's sequence against itself with one letter flipped at `pos`.
AsymptoticPair flip_one_position(const BalancedSpec& spec, std::int64_t pos = 0);

}  // namespace qmarkoff
