#pragma once

#include <stdexcept>
#include <string>

namespace crcodes {

// Bad parameters, malformed files, exceeded size guards.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An exact search ran out of its node budget before finishing.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Process exit codes shared by the CLI and tests.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_budget_unknown = 3;
inline constexpr int exit_internal_error = 4;

} // namespace crcodes
