#pragma once

#include <stdexcept>
#include <string>

namespace lubanski {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// Bad argument: index out of range, pair off the unit hyperbola, momentum off
// its declared shell, incompatible family and mass.
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace lubanski
