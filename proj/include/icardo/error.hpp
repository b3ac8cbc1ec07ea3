#pragma once

#include <stdexcept>
#include <string>

namespace icardo {

/// Bad user input: malformed files, schema mismatches, invalid flags.
/// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal numerical failure (NaN, non-convergence treated as fatal).
/// The CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace icardo
