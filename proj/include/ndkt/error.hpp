#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndkt {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-bounds arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed arguments the operation is not defined for (non-cubic shape, wrong order).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds the memory guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Tour file diagnostics; line and column are 1-based, 0 when not applicable.
class ParseError : public InputError {
 public:
  enum class Kind { header, shape, token, row_length, cell_count, duplicate, out_of_range };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : InputError(format(line, column, what)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& what) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ndkt
