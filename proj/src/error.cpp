#include "gchfspin/error.hpp"

namespace gchfspin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::LinearlyDependent: return "LinearlyDependent";
    case ErrorKind::InvalidMetric: return "InvalidMetric";
    case ErrorKind::NonHermitianResult: return "NonHermitianResult";
    case ErrorKind::NotUnitVector: return "NotUnitVector";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::MetricNotIdentity: return "MetricNotIdentity";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "UnknownError";
}

}  // namespace gchfspin
