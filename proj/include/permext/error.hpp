#pragma once

#include <stdexcept>
#include <string>

namespace permext {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields (Q vs GF(p), or different primes).
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Incompatible matrix/vector/permutation sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Construction-time invariant violated: composite modulus, duplicate
/// vectors, non-bijective image array, out-of-range index, and the like.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (scalar strings, JSON documents).
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An enumeration or closure would exceed its configured cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// The vector set does not span the ambient space where spanning is required.
class NotSpanningError : public Error {
 public:
  using Error::Error;
};

/// The requested permutation has no extension to an automorphism.
class NoExtensionError : public Error {
 public:
  using Error::Error;
};

/// The point set is not a simplex of the required kind.
class NotSimplexError : public Error {
 public:
  using Error::Error;
};

/// u(x) is not proportional to y, so no scalar normalization exists.
class NotCollinearError : public Error {
 public:
  using Error::Error;
};

/// Operation only defined over finite fields (exhaustive search over Q is not).
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

}  // namespace permext
