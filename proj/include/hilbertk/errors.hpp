#pragma once

#include <stdexcept>
#include <string>

namespace hilbertk {

// Malformed or out-of-domain input (non-square-free d, bad class spec, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A function was called outside its documented precondition.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No built-in conjugacy-class counts for the requested field.
class MissingClassData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// SL computation at q = 1 needs the abelianization of the PSL quotient.
class MissingAbelianization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hilbertk
