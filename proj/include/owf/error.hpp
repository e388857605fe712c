#pragma once

#include <stdexcept>
#include <string>

namespace owf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction produced an object that failed its own post-check.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace owf
