#pragma once

#include <stdexcept>
#include <string>

namespace exh {

// Base for every error raised by the library. Callers that only need to
// distinguish "bad input" from "resource cap" catch the two subclasses below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Raised when a configured bound (leaves, clauses, combinations, pivots) is hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An exhauster of the wrong kind was handed to a condition.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace exh
