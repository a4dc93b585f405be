#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stretchkit {

enum class ErrorKind {
  EmptyGenerators,
  InvalidGenerator,
  GcdNotOne,
  NotMember,
  TrivialSemigroup,
  GeneratorNotInRing,
  BaseMismatch,
  ZeroIdeal,
  UnitIdeal,
  NotNested,
  NotStabilized,
  NotAReduction,
  OracleMismatch,
  TheoremViolation,
  ParseError,
  CapExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries a kind so callers (and tests)
/// can dispatch without matching on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stretchkit
