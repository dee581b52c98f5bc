#pragma once

#include <stdexcept>
#include <string>

namespace qbox {

// Base of every failure the engine reports. Subclasses map one-to-one onto the
// error conditions callers are expected to distinguish.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A zero row with a nonzero right side survived elimination.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

class Underdetermined : public Error {
 public:
  using Error::Error;
};

class BoundaryViolation : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("polynomial is identically zero") {}
};

class InvalidDegree : public Error {
 public:
  using Error::Error;
};

// A moment series whose terms decay too slowly to converge.
class Divergent : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qbox
