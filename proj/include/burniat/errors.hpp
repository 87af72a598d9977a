#pragma once

#include <stdexcept>
#include <string>

namespace burniat {

/// Malformed input: unknown variable, bad syntax, inconsistent dimensions.
/// Parsers fill in the 1-based line and column of the offending token.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

/// Raised by vertex enumeration and volume on unbounded systems.
class UnboundedError : public std::runtime_error {
 public:
  UnboundedError() : std::runtime_error("unbounded") {}
};

/// A theorem-backed predicate was called outside its hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what)
      : std::runtime_error("theorem hypothesis violated: " + what) {}
};

}  // namespace burniat
