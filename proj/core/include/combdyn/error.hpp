#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace combdyn {

// Every failure the library reports carries one of these codes. The CLI
// prints the code name so scripted callers can branch on it.
enum class ErrorCode {
  SyntaxError,
  NotABijection,
  NotASingleCycle,
  LengthMismatch,
  OutOfRange,
  InvalidSwapSet,
  TooShort,
  Inconsistent,
  NotACycle,
  EvenSwapCount,
  NotSquare,
  DivisorZero,
  CapExceeded,
  NotUnimodal,
  NoUnimodalSuccessor,
  MultipleUnimodalSuccessors,
  FormulaViolation,
  NotALoop,
  InvalidParameter,
  NoAttractorDetected,
  DegenerateOrbit,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace combdyn
