#pragma once

#include <stdexcept>
#include <string>

namespace braidkit {

/// Failure categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  NotAUnit,
  SignatureMismatch,
  BadGrouping,
  NonTerminating,
  CompletionBudgetExceeded,
  UnorientablePair,
  MissingEntry,
  CrossedModuleViolation,
  UnknownEntry,
  SyntaxError,
  UnknownGenerator,
  VerificationFailed,
  SingularSystem,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse errors carry a source position (1-based).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, int line, int column)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace braidkit
