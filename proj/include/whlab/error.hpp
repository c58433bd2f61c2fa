#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace whlab {

enum class ErrorKind {
  InvalidSignPattern,
  NonIntegerDimension,
  DimensionMismatch,
  NotSingleParameter,
  InvalidCase,
  IndexOutOfRange,
  InsufficientGrid,
  TypeIUndefined,
  OutsideDomain,
  BGFiniteComplexUndefined,
  InvalidTruncation,
  NonFiniteValue,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. Every precondition violation raised by the
/// construction and certification routines is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace whlab
