#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfderiv {

enum class ErrorKind {
  NotPrime,
  NotIrreducible,
  NotPrimitive,
  FieldTooLarge,
  MixedFields,
  DivisionByZero,
  ZeroToZeroPower,
  InvalidArgument,
  ParseError,
  DegenerateDeformation,
  NotFrobenius,
  FieldTooLargeForExhaustive,
  NotInSubspace,
  NoExpFunction,
  OutOfRange,
  Overflow,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gfderiv
