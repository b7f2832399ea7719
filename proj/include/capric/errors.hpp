#pragma once

#include <stdexcept>
#include <string>

namespace capric {

/// Bad user input: malformed files, invalid parameters, mismatched state
/// spaces, tables that fail capacity validation.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input is structurally fine but exceeds a hard size budget (subset
/// enumeration caps, LP state cap).
class budget_error : public input_error {
 public:
  explicit budget_error(const std::string& what) : input_error(what) {}
};

/// Numerical failure inside a solver: a result could not be certified against
/// its defining inequalities. Raised instead of guessing a verdict.
class solver_error : public std::runtime_error {
 public:
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace capric
