#pragma once

#include <stdexcept>
#include <string>

namespace sgh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed diagram text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Markings that violate a diagram invariant, or a bad precondition on one.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The state space is larger than the configured cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction did not (d^2 != 0, not a chain
/// map, inconsistent gradings, ...).
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace sgh
