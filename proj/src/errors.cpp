#include "permgauge/errors.hpp"

namespace permgauge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedSeries: return "UnsupportedSeries";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::NotModular: return "NotModular";
    case ErrorCode::InconsistentRing: return "InconsistentRing";
    case ErrorCode::NoPositiveEigenvector: return "NoPositiveEigenvector";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::UnknownSeries: return "UnknownSeries";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ArityError:
    case ErrorCode::UnknownSeries:
    case ErrorCode::UnknownLabel:
    case ErrorCode::UnsupportedSeries:
    case ErrorCode::InvalidSpec:
    case ErrorCode::InvalidDocument:
      return true;
    default:
      return false;
  }
}

}  // namespace permgauge
