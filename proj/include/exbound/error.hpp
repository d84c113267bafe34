#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exbound {

enum class ErrorKind {
  DimensionMismatch,
  NotNormalized,
  NotHermitian,
  NotOrthogonal,
  InvalidDistance,
  TooLarge,
  IndexOutOfRange,
  ProbabilityOutOfRange,
  GraphShapeMismatch,
  NonPositiveInput,
  InvalidDistribution,
  ParseError,
  InvariantViolation,
  IoFailure,
  InvalidFlag,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::InvalidDistance: return "InvalidDistance";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorKind::GraphShapeMismatch: return "GraphShapeMismatch";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::InvalidFlag: return "InvalidFlag";
  }
  return "Unknown";
}

}  // namespace exbound
