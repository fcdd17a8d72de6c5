#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

enum class ErrorCode {
  DimensionMismatch,
  Singular,
  NotNilpotent,
  ParseError,
  RelationFails,
  YNotNilpotent,
  ParamCountMismatch,
  ZeroPolynomial,
  EigenvaluesNotRational,
  NotAnAlgebra,
  GensNotInAlgebra,
  InvarianceFailure,
  NotFullBlock,
  ZeroParameter,
  Inconclusive,
  InvariantViolation,
};

/// Stable upper-snake name of a code, e.g. "RELATION_FAILS".
std::string_view error_code_name(ErrorCode code);

/// Every library failure is reported through this type; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jordan
