#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different (p, n).
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different (p, n) contexts") {}
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The instance violates one of the standing hypotheses. `hypothesis()` is a
/// short machine-readable tag, `what()` the human-readable explanation.
class InvalidInstance : public Error {
 public:
  InvalidInstance(std::string hypothesis, const std::string& message)
      : Error(message), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// The cohomology oracle refuses instances above its configured size bound.
class OracleOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed instance document; line/column are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace kummer
