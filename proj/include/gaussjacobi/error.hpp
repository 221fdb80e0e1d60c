#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussjacobi {

enum class ErrorCode {
  DegreeOutOfRange,
  ParameterOutOfRange,
  NotFinite,
  Overflow,
  DomainError,
  NoConvergence,
  StepOutOfRadius,
  MaxItersExceeded,
  OmegaNonpositive,
  DeltaNonpositive,
  CountMismatch,
  SingularNormalization,
  EigenNoConvergence,
  LengthMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI reports the code name on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaussjacobi
