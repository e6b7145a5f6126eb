#pragma once

#include <stdexcept>
#include <string>

namespace ifsembed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text or document input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (cover size, search nodes) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace ifsembed
