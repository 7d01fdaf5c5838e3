#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded a configured resource cap (conductor, group order, cosets).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace delpezzo
