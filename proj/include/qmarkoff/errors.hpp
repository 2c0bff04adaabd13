#pragma once

#include <stdexcept>
#include <string>

namespace qmarkoff {

/// A caller violated an operation's precondition (bad input, malformed text).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked mathematical identity or inequality failed.
///
/// On well-formed input this indicates a bug; the verification harnesses
/// also raise it deliberately when fed counterexamples.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmarkoff
