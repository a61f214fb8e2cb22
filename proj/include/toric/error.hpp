#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (CLI exit code 2).
struct InputError : Error {
  using Error::Error;
};

/// An exact enumeration would exceed its configured budget (CLI exit
/// code 3).  Raised instead of guessing; never a wrong answer.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace toric
