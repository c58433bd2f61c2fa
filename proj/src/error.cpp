#include "whlab/error.hpp"

namespace whlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSignPattern: return "InvalidSignPattern";
    case ErrorKind::NonIntegerDimension: return "NonIntegerDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSingleParameter: return "NotSingleParameter";
    case ErrorKind::InvalidCase: return "InvalidCase";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InsufficientGrid: return "InsufficientGrid";
    case ErrorKind::TypeIUndefined: return "TypeIUndefined";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::BGFiniteComplexUndefined: return "BGFiniteComplexUndefined";
    case ErrorKind::InvalidTruncation: return "InvalidTruncation";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
  }
  return "Unknown";
}

}  // namespace whlab
