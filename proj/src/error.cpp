#include "gfderiv/error.hpp"

namespace gfderiv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroToZeroPower: return "ZeroToZeroPower";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateDeformation: return "DegenerateDeformation";
    case ErrorKind::NotFrobenius: return "NotFrobenius";
    case ErrorKind::FieldTooLargeForExhaustive: return "FieldTooLargeForExhaustive";
    case ErrorKind::NotInSubspace: return "NotInSubspace";
    case ErrorKind::NoExpFunction: return "NoExpFunction";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace gfderiv
