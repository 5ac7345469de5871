#include "ddinv/error.hpp"

namespace ddinv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::RowLengthMismatch: return "RowLengthMismatch";
    case ErrorKind::NonNumericToken: return "NonNumericToken";
    case ErrorKind::TooFewRows: return "TooFewRows";
    case ErrorKind::TrailingData: return "TrailingData";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::DominanceViolated: return "DominanceViolated";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

// what() reads e.g. "NonPositiveEntry(1,2)" when detail is "(1,2)".
Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + detail), kind_(kind) {}

}  // namespace ddinv
