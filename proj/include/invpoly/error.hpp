#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invpoly {

enum class ErrorKind {
  Syntax,
  NotInvertible,
  DuplicateMonomial,
  NonPositiveWeight,
  UnsupportedShape,
  NotASubgroup,
  NotASymmetry,
  GroupTooLarge,
  NotIsolated,
  NotRational,
  DivisionByZero,
  AmbientMismatch,
  NonIntegerQuotient,
  UnsupportedArm,
  InvalidRank,
  DenominatorVanishes,
  NotSL,
  Indivisible,
  MissingBaseData,
  UnknownName,
  Overflow,
};

inline constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotASymmetry: return "NotASymmetry";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NonIntegerQuotient: return "NonIntegerQuotient";
    case ErrorKind::UnsupportedArm: return "UnsupportedArm";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::NotSL: return "NotSL";
    case ErrorKind::Indivisible: return "Indivisible";
    case ErrorKind::MissingBaseData: return "MissingBaseData";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace invpoly
