#pragma once

#include <stdexcept>
#include <string>

namespace symcap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or configuration text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or construction would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An exact computation that cannot degrade gracefully ran out of budget.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// A value does not fit the 128-bit integer width.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace symcap
