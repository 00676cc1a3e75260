#include "qentro/errors.hpp"

namespace qentro {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NegativeSpectrum: return "NegativeSpectrum";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionShrink: return "DimensionShrink";
    case ErrorKind::DimensionNotFactorizable: return "DimensionNotFactorizable";
    case ErrorKind::OverflowRisk: return "OverflowRisk";
    case ErrorKind::SparsityViolated: return "SparsityViolated";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::InequalityViolation: return "InequalityViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace qentro
