#pragma once

#include <stdexcept>
#include <string>

namespace gammoid {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph document. `line()` is 1-based; 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message + (line ? ", line " + std::to_string(line) : std::string{})), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration or search hit its configured budget before finishing.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug or a non-exact ambient graph.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammoid
