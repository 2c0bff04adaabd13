#pragma once

// Finite descriptions of biinfinite balanced sequences and the machinery
// that walks their factor languages: mechanical and characteristic words,
// compact representations of L_n, the lexicographic flip chain, the radix
// monotonicity harness, and the M1..M4 classification.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qmarkoff/errors.hpp"
#include "qmarkoff/numeric.hpp"
#include "qmarkoff/qpoly.hpp"
#include "qmarkoff/words.hpp"

namespace qmarkoff {

enum class MechanicalKind { lower, upper };

struct MechanicalSpec {
  Rational alpha;
  Rational rho;
  MechanicalKind kind = MechanicalKind::lower;

  /// Requires 0 <= alpha <= 1; rho is reduced into [0, 1).
  static MechanicalSpec make(Rational alpha, Rational rho, MechanicalKind kind);

  /// Denominator of alpha: the sequence is periodic with this period.
  std::size_t period() const;
};

/// floor(alpha(n+1)+rho) - floor(alpha n+rho), or the ceiling analog.
Letter mechanical_letter(const MechanicalSpec& spec, std::int64_t pos);

/// Prefix of the characteristic Sturmian word given by the standard words
/// s_{-1} = b, s_0 = a, s_k = s_{k-1}^{d_k} s_{k-2}. The directive is reused
/// cyclically, so {1} yields the Fibonacci word abaababaab...
/// Throws PreconditionError on an empty directive or a zero entry.
BinaryWord characteristic_word(std::span<const unsigned> directive, std::size_t length);

enum class SkewForm { xxyxx, blocks };

struct PeriodicSpec {
  BinaryWord word;
};

struct CharacteristicSpec {
  std::vector<unsigned> directive;
};

/// Ultimately periodic, not purely periodic: ^∞x y x^∞ (xxyxx) or
/// ^∞(ymx)(ymy)(xmy)^∞ (blocks) where amb is a Christoffel word.
struct SkewSpec {
  BinaryWord m;
  SkewForm form = SkewForm::xxyxx;
  Letter x = Letter::a;  // y is the other letter

  Letter y() const { return other(x); }
};

class BalancedSpec {
 public:
  using Variant = std::variant<PeriodicSpec, CharacteristicSpec, SkewSpec, MechanicalSpec>;

  /// Throws PreconditionError unless ^∞word^∞ is balanced.
  static BalancedSpec periodic(BinaryWord word);
  static BalancedSpec characteristic(std::vector<unsigned> directive);
  static BalancedSpec fibonacci() { return characteristic({1}); }
  /// Throws PreconditionError unless amb is Christoffel (and m = ε for xxyxx).
  static BalancedSpec skew(BinaryWord m, SkewForm form, Letter x);
  static BalancedSpec mechanical(MechanicalSpec spec);

  /// Grammar: periodic:WORD | fibonacci | characteristic:a1,a2,... |
  /// skew:m=WORD,form=xxyxx|blocks,xy=ab|ba |
  /// mechanical:alpha=P/Q,rho=P/Q,kind=lower|upper
  static BalancedSpec parse(std::string_view text);

  /// Canonical text in the grammar above.
  std::string str() const;

  const Variant& variant() const { return v_; }

  /// Length of a period of the sequence, or 0 when aperiodic.
  std::size_t period() const;

 private:
  explicit BalancedSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Letters of the sequence at positions first .. first+count-1.
/// Characteristic specs are placed as ~c a.b c (c the characteristic word,
/// the dot between positions -1 and 0); skew specs as ~p x.y p.
BinaryWord window(const BalancedSpec& spec, std::int64_t first, std::size_t count);

/// The right half p of a factorization ~p x.y p around positions {-1, 0},
/// truncated to `length` letters.
struct CentralFactorization {
  Letter x;
  Letter y;
  BinaryWord p;
};

/// Only characteristic and skew specs carry one.
bool has_central_factorization(const BalancedSpec& spec);

/// Throws PreconditionError("no central factorization") for periodic and
/// mechanical specs.
CentralFactorization central_factorization(const BalancedSpec& spec, std::size_t length);

/// (~w ab w, ~w ba w)
std::pair<BinaryWord, BinaryWord> compact_representations(const BinaryWord& w);

struct FactorLanguage {
  std::size_t n = 0;
  std::vector<BinaryWord> factors;  // lexicographically sorted
};

FactorLanguage enumerate_factors(const BalancedSpec& spec, std::size_t n);

enum class ChangeKind {
  flip_ab_ba,  // ~u ab v -> ~u ba v
  last_letter, // w a -> w b
  wrap_awa,    // b w -> a w a
  wrap_awb,    // b w -> a w b
  composite,   // none of the local forms
};

std::string_view to_string(ChangeKind kind);

struct Change {
  BinaryWord from;
  BinaryWord to;
  ChangeKind kind = ChangeKind::composite;
  // flip_ab_ba: from = ~u ab v. last_letter/wrap: u = w, v empty.
  BinaryWord u;
  BinaryWord v;

  /// flip_ab_ba with u a prefix of v or vice versa.
  bool flip_prefix_condition() const;
};

/// Which local change turns `from` into `to`, if any.
Change classify_change(const BinaryWord& from, const BinaryWord& to);

struct FlipChain {
  std::size_t n = 0;
  BinaryWord w;                     // length n-1: u_0 = a w, u_n = b w
  std::vector<BinaryWord> factors;  // u_0 < ... < u_n
  std::vector<Change> changes;      // u_j -> u_{j+1}
};

/// Lexicographic chain of the n+1 length-n factors with each step tagged.
/// Throws PreconditionError("complexity violation") when the language does
/// not have n+1 factors; VerificationFailure when the chain breaks the
/// one-last-letter / prefix-flip structure.
FlipChain flip_permutation(const BalancedSpec& spec, std::size_t n);

struct ChainLink {
  Change change;
  IntPolynomial difference;  // q_markoff(to) - q_markoff(from)
  bool increasing = false;   // difference nonzero with nonnegative coefficients
};

/// Compares q_markoff along one radix step u <radix v.
ChainLink compare_radix_pair(const BinaryWord& u, const BinaryWord& v);

class MonotonicityViolation : public VerificationFailure {
 public:
  explicit MonotonicityViolation(ChainLink link);
  const ChainLink& link() const { return link_; }

 private:
  ChainLink link_;
};

struct RadixChainReport {
  std::vector<BinaryWord> factors;  // ε then lengths 1..max_n, radix order
  std::vector<ChainLink> links;     // consecutive pairs
};

/// Walks the maximal radix chain through all factors of length <= max_n and
/// checks every step increases q_markoff in the coefficientwise order.
/// Throws MonotonicityViolation on the first failing step.
RadixChainReport radix_chain_check(const BalancedSpec& spec, std::size_t max_n);

enum class BalancedClass { M1, M2, M3, M4 };

std::string_view to_string(BalancedClass c);

/// Window radius for classify: centers |c| <= R are scanned; a cut counts
/// as a center when it stays mirrored to 2R and, for aperiodic specs, to
/// 65536 letters.
inline constexpr std::size_t kClassifyRadius = 64;

/// Number of mirrored letter pairs s_{c-1-k} = s_{c+k}, k = 1, 2, ...,
/// around a cut with s_{c-1} != s_c, capped at max_radius; nullopt when
/// s_{c-1} = s_c.
std::optional<std::size_t> mirror_radius(const BalancedSpec& spec, std::int64_t c, std::size_t max_radius);

/// Class by declared variant, confirmed on a finite window. Throws
/// VerificationFailure("spec/class mismatch") when the window disagrees.
BalancedClass classify(const BalancedSpec& spec, std::size_t radius = kClassifyRadius);

struct CurveRow {
  BinaryWord word;
  Rational gamma;
  Rational value;
};

/// q_markoff(w) at q = gamma for every factor with |w| <= max_len (ε
/// included), rows grouped by word in radix order. Throws
/// PreconditionError("positivity domain") unless every gamma > 0, and
/// VerificationFailure if some column is not strictly increasing.
std::vector<CurveRow> curves_export(const BalancedSpec& spec, std::size_t max_len,
                                    const std::vector<Rational>& gammas);

}  // namespace qmarkoff
