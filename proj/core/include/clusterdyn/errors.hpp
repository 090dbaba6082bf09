#pragma once

#include <stdexcept>
#include <string>

namespace clusterdyn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

/// Interval refinement hit the precision cap without separating from zero.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// Exact iteration exceeded the configured numerator/denominator bit budget.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

class UndefinedForR2 : public Error {
 public:
  using Error::Error;
};

class UnsupportedK : public Error {
 public:
  using Error::Error;
};

class EmptyLevelSet : public Error {
 public:
  using Error::Error;
};

/// A sum of two PosReals whose ratio is irrational has no PosReal value.
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterdyn
