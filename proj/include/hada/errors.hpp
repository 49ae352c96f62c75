#pragma once

#include <stdexcept>
#include <string>

namespace hada {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem hypothesis or operation precondition does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// The input has a shape for which no closed form is implemented.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

// Malformed instance data: bad rationals, duplicate names, bad structure.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A computed result failed its own independent verification.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hada
