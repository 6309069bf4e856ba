#pragma once

#include <stdexcept>
#include <string>

namespace polyadic {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation does not hold (bad shape, wrong arity,
// non-homogeneous element, pattern mismatch, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// The requested computation is larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A document could not be parsed or does not match its schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyadic
