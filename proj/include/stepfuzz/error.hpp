#pragma once

#include <stdexcept>
#include <string>

namespace stepfuzz {

/// Violated precondition on an in-process call (bad argument, mismatched shapes).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structurally valid input that fails a data invariant (bad counts, unknown label, ...).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. line/column are 1-based; 0 when unknown.
class parse_error : public validation_error {
 public:
  parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : validation_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace stepfuzz
