#pragma once

#include <stdexcept>
#include <string>

namespace vspace {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file or program text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Inputs that violate an operation's precondition (bad space, cover,
// labeling, endpoints, coding configuration, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A search would exceed its configured cover/node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace vspace
