#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chern {

enum class ErrorKind {
  // input
  SyntaxError,
  UnknownVariable,
  MalformedDocument,
  InvalidField,
  ClosureUnsupported,
  // algebra
  ArityMismatch,
  ZeroPolynomial,
  ResourceCap,
  ZeroDivisorGenerator,
  NotMonomial,
  ZeroDimensionalRing,
  NotNested,
  NoStabilization,
  NotMPrimary,
  NotAdmissibleUpTo,
  RegularityFails,
  RangeExceeded,
  NoReductionFound,
  WrongDimension,
  NotAReduction,
  HypothesisUnverified,
  HomologyRouteUnavailable,
  NotRegularSequence,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine. `kind()` is stable and is what callers
/// (and the CLI exit-code mapping) should dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Input errors map to exit code 2; everything else is mathematical.
  bool is_input_error() const noexcept;

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error(ErrorKind::SyntaxError,
              "at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace chern
