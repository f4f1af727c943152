#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quivertk {

  // Base class for everything the toolkit throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed DSL / representation / decomposition text.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  // A value violates a type invariant (unknown vertex, non-composable path,
  // non-idempotent matrix, ...).
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // The input lies outside the class of presentations an operation supports.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  // A brute-force size guard was exceeded.
  class GuardError : public Error {
   public:
    using Error::Error;
  };

}  // namespace quivertk
