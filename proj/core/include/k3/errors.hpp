#pragma once

#include <stdexcept>

namespace k3 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different coefficient domains or variable tables.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A division that must be exact left a nonzero remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input describes a degenerate object, e.g. a Weierstrass model with h == 0.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace k3
