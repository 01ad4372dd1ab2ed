#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stpcs {

/// Every failure the library reports carries one of these codes. The CLI
/// echoes the code name so scripts can branch on it.
enum class ErrorCode {
  InvalidArgument,
  BadShape,
  ZeroVector,
  ZeroColumn,
  DependentInput,
  InsufficientBasis,
  BudgetExceeded,
  NotBibd,
  NotExpandable,
  BadDiag,
  DegreeMismatch,
  Unsupported,
  NoSolution,
  NotUnique,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace stpcs
