#pragma once

#include <stdexcept>
#include <string>

namespace qentro {

// Failure modes surfaced to callers. The enumerator name is part of the
// reporting format (validate prints "<kind>: <detail>").
enum class ErrorKind {
  NonFinite,
  NotHermitian,
  TraceNotOne,
  NotPositive,
  ConvergenceFailure,
  NegativeSpectrum,
  DimensionMismatch,
  DimensionShrink,
  DimensionNotFactorizable,
  OverflowRisk,
  SparsityViolated,
  ParamOutOfRange,
  InequalityViolation,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  // Detail text without the "<kind>: " prefix that what() carries.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace qentro
