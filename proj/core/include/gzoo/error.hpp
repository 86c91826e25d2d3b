#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gzoo {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// process exit codes (input errors -> 2, budget errors -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: syntax, undeclared generator, bad cycle, ...
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configurable work cap was hit. Never a hang, never a partial answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class EnumerationOverflow : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// A precondition of a mathematical operation failed.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotTransitive : public DomainError {
 public:
  using DomainError::DomainError;
};

class SamePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

class OddEuler : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotModularQuotient : public DomainError {
 public:
  using DomainError::DomainError;
};

class TrivialClass : public DomainError {
 public:
  using DomainError::DomainError;
};

class Disconnected : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonUniform : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoCosetTable : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegreeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace gzoo
