#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crsf {

enum class Errc {
  NotInvertible,
  DomainError,
  NonCoprime,
  NotPseudoconvex,
  InvalidConePoint,
  GcdCondition,
  ExponentMismatch,
  ExponentOverflow,
  NegativeMultiplicity,
  Schema,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::DomainError: return "DomainError";
    case Errc::NonCoprime: return "NonCoprime";
    case Errc::NotPseudoconvex: return "NotPseudoconvex";
    case Errc::InvalidConePoint: return "InvalidConePoint";
    case Errc::GcdCondition: return "GcdCondition";
    case Errc::ExponentMismatch: return "ExponentMismatch";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::Schema: return "Schema";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace crsf
