#pragma once

#include <stdexcept>
#include <string>

namespace dichroma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial division left a nonzero remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

/// A rank table violates one of the matroid rank axioms.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

/// An index, level or parameter lies outside its valid range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds a configured size cap.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A combinatorial identity that must hold was observed to fail.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace dichroma
