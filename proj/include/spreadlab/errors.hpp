#pragma once

#include <stdexcept>
#include <string>

namespace spreadlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument value (negative power, empty variable set, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different ring contexts.
class ContextError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural requirement (e.g. not weighted-homogeneous).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined on the given input (e.g. degree of the zero polynomial).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Randomized construction could not be completed from the given seed.
class SeedError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial or session text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spreadlab
