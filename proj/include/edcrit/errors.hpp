#pragma once

#include <stdexcept>
#include <string>

namespace edcrit {

// Every library failure derives from Error; the CLI maps the concrete kind to
// its exit code (input 1, refusal/boundary/degenerate 2, unsupported 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (dimensions, non-finite entries, parse errors).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition fails, e.g. repeated singular values.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// Data point lies on a discriminant or exceptional locus.
class BoundaryError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

/// Data for which the critical set is not finite (e.g. the centre of a circle).
class DegenerateDataError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A self-check inside the library failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace edcrit
