#pragma once

#include <stdexcept>
#include <string>

namespace ratpow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero/unit ideal, dimension
/// mismatch, non-squarefree input, bad parameters).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds the desk-scale limits an exact search supports.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A lattice-point region failed the box-escape test.
class UnboundedRegion : public Error {
 public:
  using Error::Error;
};

/// A runtime self-check (box stability, certification) failed. Indicates a
/// bug or an assumption that does not hold for the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ratpow
