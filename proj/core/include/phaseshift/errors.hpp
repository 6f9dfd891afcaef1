#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phaseshift {

enum class ErrorCode {
  InvalidGrid,
  EvenPointCount,
  InvalidPotential,
  SupportBeyondGrid,
  TabulatedGridMismatch,
  GridMismatch,
  NonFiniteValue,
  NonpositiveK,
  WronskianViolation,
  NodeDetected,
  OrderOutOfRange,
  InsufficientFValues,
  TruncationTooHigh,
  InvalidSweep,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All failures raised by the library carry a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phaseshift
