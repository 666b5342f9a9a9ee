#pragma once

#include <stdexcept>
#include <string>

namespace hkdim {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when graph-description text is malformed; carries the 1-based
/// offending line (0 for whole-file problems such as a missing header line).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Raised when an explicit resource budget is exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails; indicates a bug in this
/// library, never bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hkdim
