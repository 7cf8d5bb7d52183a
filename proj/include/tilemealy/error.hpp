#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tilemealy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text-format errors carry the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A configured size limit was hit (power-machine states, exhaustive
// quantifier space, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called on inputs that do not satisfy its documented
// precondition (invalid torus, uncertified untileable square, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tilemealy
