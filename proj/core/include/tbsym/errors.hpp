#pragma once

#include <stdexcept>
#include <string>

namespace tbsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different variable tables, or an unknown variable.
class ContextError : public Error {
 public:
  using Error::Error;
};

// Matrix/series dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

// Degrees or other caller-supplied values out of the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class DescentTerminated : public Error {
 public:
  using Error::Error;
};

}  // namespace tbsym
