#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphcurv {

/// Base of every error raised by the library. The CLI maps the concrete
/// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: out-of-range vertices, self-loops, bad parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string s = "parse error";
    if (line > 0) {
      s += " at line " + std::to_string(line);
      if (column > 0) s += ", column " + std::to_string(column);
    }
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// The input is well formed but outside the operation's domain
/// (disconnected graph for a tree count, non-geometric host, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request would exceed a configured work or memory cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction (Gauss-Bonnet, Poincare-Hopf)
/// failed. Indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphcurv
