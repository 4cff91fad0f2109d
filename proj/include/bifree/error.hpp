#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bifree {

enum class ErrorCode {
  NonzeroConstantTerm,
  ZeroConstantTerm,
  NotInvertible,
  TruncationExceeded,
  SizeMismatch,
  CapExceeded,
  UniquenessViolation,
  InvalidSize,
  NotComparable,
  NotNormalized,
  ZeroMean,
  ZeroScale,
  DivisionError,
  InvalidSubclass,
  ParseError,
  NotNoncrossing,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type;
/// `code()` lets callers (and the CLI) distinguish them without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bifree
