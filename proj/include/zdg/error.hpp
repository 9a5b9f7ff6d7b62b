#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zdg {

enum class ErrorKind {
  InvalidArgument,
  NotAPoset,
  NotALattice,
  NotBounded,
  EmptyInput,
  ChainTooShort,
  QuotientNotLattice,
  SpecInvalid,
  StructureViolation,
  PreconditionFailed,
  TheoremViolated,
  NotCoReachable,
  Disconnected,
  TooLarge,
  FormulaMismatch,
  SignatureMismatch,
  MethodInapplicable,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ChainTooShort: return "ChainTooShort";
    case ErrorKind::QuotientNotLattice: return "QuotientNotLattice";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::TheoremViolated: return "TheoremViolated";
    case ErrorKind::NotCoReachable: return "NotCoReachable";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::MethodInapplicable: return "MethodInapplicable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures keep the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zdg
