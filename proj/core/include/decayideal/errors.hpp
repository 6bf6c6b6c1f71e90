#pragma once

#include <stdexcept>
#include <string>

namespace decayideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An exponent would exceed the representable range.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Witness enumeration would visit more monomials than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace decayideal
