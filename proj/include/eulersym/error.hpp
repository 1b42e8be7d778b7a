#pragma once

#include <stdexcept>
#include <string>

namespace eulersym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different variable lists.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("incompatible variable lists") {}
};

/// A text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column)
      : Error(format(message, line, column)), message_(std::move(message)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& bare_message() const { return message_; }

  /// Same error relocated to an absolute position inside a larger document.
  ParseError at(int line, int column_offset) const {
    return ParseError(message_, line, column_ + column_offset);
  }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return "col " + std::to_string(column) + ": " + message;
    return "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + message;
  }

  std::string message_;
  int line_;
  int column_;
};

}  // namespace eulersym
