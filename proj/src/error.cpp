#include "critline/error.hpp"

namespace critline {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kWrongRegion: return "WRONG_REGION";
    case ErrorCode::kPoleProximity: return "POLE_PROXIMITY";
    case ErrorCode::kTailTooLarge: return "TAIL_TOO_LARGE";
    case ErrorCode::kEtaDenominatorSmall: return "ETA_DENOMINATOR_SMALL";
    case ErrorCode::kPoleOfGamma: return "POLE_OF_GAMMA";
    case ErrorCode::kNoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::kDegenerateClosedForm: return "DEGENERATE_CLOSED_FORM";
    case ErrorCode::kNotAZero: return "NOT_A_ZERO";
    case ErrorCode::kVerificationFailed: return "VERIFICATION_FAILED";
    case ErrorCode::kDimensionTooLarge: return "DIMENSION_TOO_LARGE";
    case ErrorCode::kSingularGram: return "SINGULAR_GRAM";
    case ErrorCode::kAlphaOutOfRange: return "ALPHA_OUT_OF_RANGE";
    case ErrorCode::kOverflow: return "OVERFLOW";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace critline
