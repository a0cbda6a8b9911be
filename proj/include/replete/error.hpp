#pragma once

#include <stdexcept>
#include <string>

namespace replete {

enum class ErrorCode {
  ReflexivityViolation,
  AntisymmetryViolation,
  TransitivityViolation,
  EmptyCarrier,
  CarrierTooLarge,
  ResourceCapExceeded,
  ParseError,
  ArityMismatch,
  SignatureMismatch,
  NoBounds,
  NotMonotone,
  PreconditionUnmet,
  LawUnsatisfied,
  InvariantViolation,
  HConditionViolated,
  EmptyF,
  WrongPrototype,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers what failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace replete
