#pragma once

#include <stdexcept>
#include <string>

namespace mrees {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors or ideals that live in rings of different dimension / variables.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Operation requires a nonzero ideal.
class ZeroIdealError : public Error {
 public:
  using Error::Error;
};

/// Operation requires an m-primary ideal (finite colength).
class NotMPrimary : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the 64-bit range.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (bad bound, r = 0, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Denominator ideal not contained in numerator ideal before a length
/// subtraction. Falsifies the good-joint-reduction hypothesis rather than
/// any identity.
class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

/// Fitted polynomial disagrees with the sampled function on the
/// validation grid.
class PostulationFailure : public Error {
 public:
  using Error::Error;
};

/// A stabilizing iteration did not settle within its bound.
class NoStabilization : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that a proved statement guarantees did not hold.
/// Always indicates a bug (or a violated hypothesis upstream).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mrees
