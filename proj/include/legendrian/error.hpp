#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legendrian {

enum class ErrorCode {
  NonIntegralValley,
  MisplacedValley,
  MultiplicityMismatch,
  WindowEmpty,
  WindowTooShallow,
  Truncated,
  LengthMismatch,
  NotApplicable,
  WrongPeakCount,
  InvalidSummand,
  InvariantMismatch,
  UnknownKnot,
  ParseError,
  SchemaError,
  RangeInvalid,
};

std::string_view to_string(ErrorCode code);

// Domain error. Every failure the library reports on bad input or an
// unsatisfied precondition is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace legendrian
