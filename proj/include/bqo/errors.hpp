#pragma once

#include <stdexcept>
#include <string>

namespace bqo {

/// Precondition or contract violation on a domain operation.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search gave up before covering its candidate space.
/// Distinct from domain_error so callers can tell "false" from "gave up".
class budget_exceeded : public std::runtime_error {
public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Input text could not be parsed. Positions are 1-based; 0 means unknown.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace bqo
