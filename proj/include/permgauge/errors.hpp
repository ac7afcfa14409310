#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace permgauge {

enum class ErrorCode {
  // liealg
  UnsupportedSeries,
  InvalidSpec,
  ClosureOverflow,
  // modular / catops / gauge
  NumericalDegeneracy,
  NonIntegralMultiplicity,
  NegativeMultiplicity,
  NotModular,
  InconsistentRing,
  // ringtools
  NoPositiveEigenvector,
  SearchBudgetExceeded,
  InvalidDocument,
  // expression language / CLI
  SyntaxError,
  ArityError,
  UnknownSeries,
  UnknownLabel,
  CheckFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

// Usage errors map to CLI exit status 2, everything else to 1.
bool is_usage_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the expression parser; offset is a byte index into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t offset)
      : Error(code, message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace permgauge
