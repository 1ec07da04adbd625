#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greechie {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside the field's domain (division by zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Logic violates one of its structural invariants.
class LogicError : public Error {
 public:
  using Error::Error;
};

/// An operation needing vectors was given an atom without a ray.
class AbstractLogicError : public Error {
 public:
  explicit AbstractLogicError(const std::string& atom)
      : Error("abstract logic: atom '" + atom + "' carries no ray"), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace greechie
