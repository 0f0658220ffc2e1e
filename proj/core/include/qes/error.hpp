#pragma once

#include <stdexcept>
#include <string>

namespace qes {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Division of polynomials was requested but the divisor does not divide.
class NonZeroRemainder : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// A gauge exponent leaves a pole in the conjugated operator.
class NonCancellingPole : public Error {
 public:
  using Error::Error;
};

/// The shifted degree is not a non-negative integer.
class InvalidDegree : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// An operator image leaves the invariant space.
class OperatorNotClosed : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace qes
