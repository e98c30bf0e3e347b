#pragma once

#include <stdexcept>
#include <string>

namespace bdtriad {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or dimension precondition violated (non-square, mismatched sizes,
/// zero-dimensional space).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The characteristic polynomial has roots outside the rationals.
class IrrationalSpectrum : public Error {
 public:
  using Error::Error;
};

/// A linear system has no solution.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// x^k maps part of the domain outside the requested codomain.
class ImageNotContained : public Error {
 public:
  using Error::Error;
};

/// Malformed text input: rationals, matrix documents, CLI arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// No ordering of a transformation's eigenspaces satisfies the containments.
class NoStandardOrdering : public Error {
 public:
  using Error::Error;
};

/// More than one ordering satisfies the containments.
class AmbiguousOrdering : public Error {
 public:
  using Error::Error;
};

/// An algebraic relation the caller promised does not hold.
class RelationViolation : public Error {
 public:
  using Error::Error;
};

/// No affine map carries one eigenvalue sequence onto another.
class NoWitness : public Error {
 public:
  using Error::Error;
};

}  // namespace bdtriad
