#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ahg {

enum class ErrorCode {
  kNotHomogeneous,
  kNotFullDim,
  kNotSublattice,
  kWholeCone,
  kChiNotInLattice,
  kRightFactorMissing,
  kNotInBIdeal,
  kNotMinimal,
  kNotIsomorphic,
  kWitnessFailure,
  kNotNormal,
  kNotCurve,
  kInvalidArgument,
  kParseError,
};

// Machine-readable name, e.g. "NOT_HOMOGENEOUS".
std::string_view error_code_name(ErrorCode code);

// True for codes caused by bad user input rather than an internal fault.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ahg
