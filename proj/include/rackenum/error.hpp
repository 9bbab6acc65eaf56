#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rackenum {

/// Base class for every error raised by the library on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A presentation, subrack element, or manifest line failed to parse.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace rackenum
