#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drk {

enum class ErrorCode {
  ZeroPolynomial,
  ZeroDenominator,
  InvalidSymbol,
  InvalidArgument,
  NotNonnegative,
  OddUnimodularMultiplicity,
  FactorizationFailure,
  DivergentLogIntegral,
  ExtremeSymbol,
  InnerSymbol,
  PoleAtPoint,
  ModulusNotBelowOne,
  ModulusOne,
  StencilOutsideDisk,
  NotContactPoint,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by every numerical routine in the toolkit. The code identifies
/// which precondition or invariant failed; callers (the CLI in particular)
/// map it onto exit statuses.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drk
