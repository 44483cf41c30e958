#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgt {

/// Raised by the text parsers (words, presentations, PD codes, normal forms).
/// Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A domain-level failure: inconsistent input data, a word over the wrong
/// alphabet, an incomplete coset table used where a complete one is needed.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cgt
