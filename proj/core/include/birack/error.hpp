#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace birack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax errors in cycle notation, catalogs and braid words.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Raised when a search or sweep would exceed its configured budget.
// No partial result accompanies it.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t budget)
      : Error(what + " exceeds budget of " + std::to_string(budget)),
        budget_(budget) {}

  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace birack
