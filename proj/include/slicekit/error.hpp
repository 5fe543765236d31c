#pragma once

#include <stdexcept>
#include <string>

namespace slicekit {

enum class ErrorKind {
  Input,     // malformed text or violated precondition
  Domain,    // mathematically negative result (e.g. no counterexample exists)
  Guard,     // resource limit exceeded
  Internal,  // an invariant of the library failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based position into the offending text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::Input, what + " at line " + std::to_string(line) + ", column " +
                                    std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace slicekit
