#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smoothpoly {

enum class ErrorCode {
  ZeroVector,
  Shape,
  NotUnimodular,
  Inconsistent,
  Singular,
  Unbounded,
  Empty,
  NotFullDim,
  NotComplete,
  NonIntegral,
  ParametricWallUnsupported,
  InvalidCone,
  OutOfBounds,
  DegenerateRay,
  RealizationMismatch,
  NonIntegralVertex,
  UnknownSeed,
  ConfigError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can branch on the kind of failure, not on the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace smoothpoly
