#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gchfspin {

enum class ErrorKind {
  DimensionMismatch,
  NotOrthonormal,
  LinearlyDependent,
  InvalidMetric,
  NonHermitianResult,
  NotUnitVector,
  NotSymmetric,
  MetricNotIdentity,
  TooLarge,
  ParseError,
  ShapeError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries one of the kinds above; the CLI maps them to
/// exit codes and prints the kind name on the diagnostic stream.
class SpinError : public std::runtime_error {
 public:
  SpinError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gchfspin
