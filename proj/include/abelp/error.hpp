#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abelp {

enum class ErrorKind {
  InvalidInput,
  NonPrime,
  NonIncreasingExponents,
  ZeroMultiplicity,
  MismatchedParent,
  GroupTooLarge,
  RingTooLarge,
  IndexOutOfRange,
  NotStrictlyIncreasing,
  NotNormalizable,
  NotAdmissible,
  NoAlias,
  NotFullyInvariant,
  CanonicalFormMismatch,
  UnknownFormat,
  ShapeViolation,
  IncomparableContext,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported through this type; the kind
/// drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Budget errors are distinguished from malformed input.
  bool is_budget() const noexcept {
    return kind_ == ErrorKind::GroupTooLarge || kind_ == ErrorKind::RingTooLarge;
  }

 private:
  ErrorKind kind_;
};

}  // namespace abelp
