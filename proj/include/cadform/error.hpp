#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cadform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an operation's arguments was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. Carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// The problem does not fit the requested mode (e.g. a clause without an
/// equational constraint in TTICAD mode, or lifting with more than two variables).
class ModeError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class SizeCapError : public Error {
 public:
  SizeCapError(const std::string& message, std::size_t count, std::size_t cap)
      : Error(message), count_(count), cap_(cap) {}

  std::size_t count() const { return count_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t count_;
  std::size_t cap_;
};

/// Input is degenerate for the requested construction (e.g. a projection
/// polynomial that is identically zero).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace cadform
