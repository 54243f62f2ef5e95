#include "abelp/error.hpp"

namespace abelp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::NonIncreasingExponents: return "NonIncreasingExponents";
    case ErrorKind::ZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorKind::MismatchedParent: return "MismatchedParent";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::RingTooLarge: return "RingTooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NoAlias: return "NoAlias";
    case ErrorKind::NotFullyInvariant: return "NotFullyInvariant";
    case ErrorKind::CanonicalFormMismatch: return "CanonicalFormMismatch";
    case ErrorKind::UnknownFormat: return "UnknownFormat";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::IncomparableContext: return "IncomparableContext";
  }
  return "Unknown";
}

}  // namespace abelp
