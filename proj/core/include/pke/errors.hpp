#pragma once

#include <stdexcept>
#include <string>

namespace pke {

/// Base class for the engine's recoverable, checked-and-refuted outcomes.
/// Precondition violations (bad indices, zero factors, malformed input)
/// are reported with std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No exact polynomial quotient exists.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// The polynomial is not an exact q-th power over the rationals.
class NoExactRoot : public Error {
 public:
  using Error::Error;
};

/// A univariate polynomial is not of the form eps * (1 + t/r)^k with rational r.
class NotBinomialPower : public Error {
 public:
  using Error::Error;
};

/// Axis restriction or its companion derivative product does not match.
class ProfileMismatch : public Error {
 public:
  using Error::Error;
};

/// Cauchy data admits no polynomial continuation.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation left the domain of the potential.
class DomainError : public Error {
 public:
  using Error::Error;
};

class AmbiguousCanonicalForm : public Error {
 public:
  using Error::Error;
};

}  // namespace pke
