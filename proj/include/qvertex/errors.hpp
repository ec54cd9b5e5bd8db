#pragma once

#include <stdexcept>
#include <string>

namespace qv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (JSON, partitions, strip descriptions).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition or structural invariant does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Division by the zero polynomial or by a non-unit series.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Two series with different variable/truncation contexts were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Numeric evaluation hit a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A combinatorial sum exceeded its configured size limit.
class BlowUpError : public Error {
 public:
  using Error::Error;
};

}  // namespace qv
