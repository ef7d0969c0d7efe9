#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

// Base for every error raised by the library. Subclasses map onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: invalid root system, non-dominant weight, malformed J.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured size cap (interval size, box enumeration, group enumeration) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exact linear algebra failure (singular/degenerate/inconsistent systems).
class MathError : public Error {
 public:
  using Error::Error;
};

// A computation produced a result that contradicts a proven identity; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Fitted coefficients did not reproduce the lattice counts.
class FitFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace bruhat
