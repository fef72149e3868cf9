#pragma once

#include <stdexcept>
#include <string>

namespace linkpred {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid arguments, configuration, or input data. CLI maps these to exit 2.
struct ParameterError : Error {
  using Error::Error;
};

// Malformed input file (edge lists, registry). Carries the offending line
// number in the message where one exists.
struct ParseError : ParameterError {
  using ParameterError::ParameterError;
};

// Numerical failure at runtime (solver breakdown, divergent series).
struct NumericalError : Error {
  using Error::Error;
};

// Refusal to start a computation that would exceed a configured budget.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace linkpred
