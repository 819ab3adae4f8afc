#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylkit {

enum class ErrorKind {
  UnsupportedType,
  NotSymmetrizable,
  InvalidCartan,
  UnrecognizedDiagram,
  DimensionMismatch,
  NonTerminating,
  NotDiagramSymmetry,
  NotARealRoot,
  NotALatticeTranslation,
  NotQuasiWithinCap,
  SearchBudgetExceeded,
  IncompleteVerification,
  FixtureVerificationFailed,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace weylkit
