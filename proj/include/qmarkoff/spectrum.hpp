#pragma once

// Periodic continued fractions over positive integers, the values
// lambda_i(U), Markoff suprema, and the closed form sqrt(9 - 4/m^2) for
// sequences sigma(w) with w a Christoffel word.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qmarkoff/numeric.hpp"
#include "qmarkoff/words.hpp"

namespace qmarkoff {

/// a -> 1 1, b -> 2 2.
std::vector<unsigned> sigma_subst(const BinaryWord& w);

struct PeriodicCF {
  std::vector<unsigned> period;

  /// Throws PreconditionError on an empty period or a zero entry.
  static PeriodicCF make(std::vector<unsigned> period);

  /// a_i with i taken modulo the period.
  unsigned at(std::int64_t i) const;
};

/// Two consecutive convergents of a continued fraction; the value lies
/// between lo and hi.
struct CfBracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
};

/// [0; a_start, a_start+1, ...] truncated after `depth` and `depth-1`
/// partial quotients. Throws PreconditionError when depth < 2.
CfBracket cf_tail(const PeriodicCF& seq, std::int64_t start, std::size_t depth);

/// [0; a_start, a_start-1, ...], the tail read leftwards.
CfBracket cf_tail_backward(const PeriodicCF& seq, std::int64_t start, std::size_t depth);

struct SpectrumValue {
  BigFloat value;
  double error_bound = 0;  // |value - true value| <= error_bound
};

/// a_i + [0; a_{i+1}, ...] + [0; a_{i-1}, ...].
SpectrumValue lambda_i(const PeriodicCF& seq, std::int64_t i, std::size_t depth);

/// max of lambda_i over one period.
SpectrumValue markoff_supremum(const PeriodicCF& seq, std::size_t depth);

inline constexpr std::size_t kDefaultDepth = 64;

/// sqrt(9 - 4/m^2) evaluated as sqrt(9 m^2 - 4) / m.
BigFloat markoff_closed_form(const BigInt& m);

struct ClosedFormReport {
  BinaryWord word;
  BigInt m;  // mu(word)_12
  SpectrumValue supremum;
  BigFloat closed_form;
  double residual = 0;
  bool within_bound = false;  // residual <= error_bound + float slack
};

/// Compares markoff_supremum(sigma(word) periodized) with the closed form.
/// Throws PreconditionError("precondition: Christoffel word required").
ClosedFormReport closed_form_check(const BinaryWord& w, std::size_t depth = kDefaultDepth);

}  // namespace qmarkoff
