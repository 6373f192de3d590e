#include "drk/errors.hpp"

namespace drk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotNonnegative: return "NotNonnegative";
    case ErrorCode::OddUnimodularMultiplicity: return "OddUnimodularMultiplicity";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::DivergentLogIntegral: return "DivergentLogIntegral";
    case ErrorCode::ExtremeSymbol: return "ExtremeSymbol";
    case ErrorCode::InnerSymbol: return "InnerSymbol";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::ModulusNotBelowOne: return "ModulusNotBelowOne";
    case ErrorCode::ModulusOne: return "ModulusOne";
    case ErrorCode::StencilOutsideDisk: return "StencilOutsideDisk";
    case ErrorCode::NotContactPoint: return "NotContactPoint";
  }
  return "Unknown";
}

}  // namespace drk
