#pragma once

#include <stdexcept>
#include <string>

namespace stardisc {

// Bad parameters or violated preconditions. Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input files. Maps to CLI exit code 3.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Work refused because it would exceed the configured operation budget.
// Maps to CLI exit code 4.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stardisc
