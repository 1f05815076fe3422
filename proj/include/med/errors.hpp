#pragma once

#include <stdexcept>
#include <string>

namespace med {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input syntax (JSON, easing strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unknown node or edge.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Geometric degeneracy, e.g. collinear overlapping segments.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Invalid animation configuration (including non-monotone easing).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller misuse: mismatched arguments, infeasible requests.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace med
