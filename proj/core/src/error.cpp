#include "combdyn/error.hpp"

namespace combdyn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::NotASingleCycle: return "NotASingleCycle";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidSwapSet: return "InvalidSwapSet";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::EvenSwapCount: return "EvenSwapCount";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DivisorZero: return "DivisorZero";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotUnimodal: return "NotUnimodal";
    case ErrorCode::NoUnimodalSuccessor: return "NoUnimodalSuccessor";
    case ErrorCode::MultipleUnimodalSuccessors: return "MultipleUnimodalSuccessors";
    case ErrorCode::FormulaViolation: return "FormulaViolation";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NoAttractorDetected: return "NoAttractorDetected";
    case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace combdyn
