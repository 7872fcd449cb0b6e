#pragma once

#include <stdexcept>
#include <string>

namespace swanson {

enum class ErrorCode {
  NotHermitian,
  UnboundedBelow,
  NotRealSpectrum,
  InvalidRegion,
  SingularDenominator,
  DimensionTooSmall,
  ConvergenceFailure,
  InvalidOrder,
  ZeroUnperturbedFrequency,
  InsufficientOrders,
  NoConvergedLevels,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Exit-code category used by the CLI: invalid input/region vs numerical
/// non-convergence.
bool is_convergence_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace swanson
