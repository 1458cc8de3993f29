#pragma once

#include <stdexcept>
#include <string>

namespace coxkit {

// Root of everything the library throws on bad input or impossible algebra.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// specialize_at_one hit a genuine pole at q = 1.
class PoleAtOne : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace coxkit
