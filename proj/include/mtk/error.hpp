#pragma once

#include <stdexcept>
#include <string>

namespace mtk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic failure: division by zero, field order above the configured cap.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A data invariant does not hold. The message names the invariant and a witness.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A computed consistency check failed (criteria disagree, Verlinde mismatch, ...).
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or JSON document; the message carries the JSON path.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// The caller asked for something outside the supported scope or bounds.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace mtk
