#ifndef MODVAR_ERROR_HPP
#define MODVAR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modvar {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments that violate an operation's precondition (degree mismatch,
// out-of-range sizes, malformed codes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Text input that does not follow a documented grammar. Line and column are
// 1-based; zero means "unknown".
class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::string const& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) {
      return message;
    }
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace modvar

#endif  // MODVAR_ERROR_HPP
