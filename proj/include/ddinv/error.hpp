#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddinv {

/// Failure categories raised by the library. Indices carried in messages
/// are 1-based so that they match the row/column numbering users see in
/// matrix files.
enum class ErrorKind {
  MalformedHeader,
  RowLengthMismatch,
  NonNumericToken,
  TooFewRows,
  TrailingData,
  NonPositiveEntry,
  DominanceViolated,
  NotSymmetric,
  OrderTooSmall,
  InvalidParams,
  DomainError,
  SingularMatrix,
  NotPositiveDefinite,
  DimensionMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ddinv
