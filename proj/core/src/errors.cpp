#include "stpcs/errors.hpp"

namespace stpcs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::DependentInput: return "DependentInput";
    case ErrorCode::InsufficientBasis: return "InsufficientBasis";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotBibd: return "NotBibd";
    case ErrorCode::NotExpandable: return "NotExpandable";
    case ErrorCode::BadDiag: return "BadDiag";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace stpcs
