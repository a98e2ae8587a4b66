#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critline {

enum class ErrorCode {
  kInvalidArgument,
  kWrongRegion,
  kPoleProximity,
  kTailTooLarge,
  kEtaDenominatorSmall,
  kPoleOfGamma,
  kNoConvergence,
  kDegenerateClosedForm,
  kNotAZero,
  kVerificationFailed,
  kDimensionTooLarge,
  kSingularGram,
  kAlphaOutOfRange,
  kOverflow,
};

// Upper-case wire name, e.g. "POLE_PROXIMITY".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace critline
