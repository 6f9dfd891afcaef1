#include "phaseshift/errors.hpp"

namespace phaseshift {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::EvenPointCount: return "EvenPointCount";
    case ErrorCode::InvalidPotential: return "InvalidPotential";
    case ErrorCode::SupportBeyondGrid: return "SupportBeyondGrid";
    case ErrorCode::TabulatedGridMismatch: return "TabulatedGridMismatch";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonpositiveK: return "NonpositiveK";
    case ErrorCode::WronskianViolation: return "WronskianViolation";
    case ErrorCode::NodeDetected: return "NodeDetected";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::InsufficientFValues: return "InsufficientFValues";
    case ErrorCode::TruncationTooHigh: return "TruncationTooHigh";
    case ErrorCode::InvalidSweep: return "InvalidSweep";
  }
  return "Unknown";
}

}  // namespace phaseshift
