#pragma once

#include <stdexcept>
#include <string>

namespace heckekit {

/// Malformed text input (labels, weights, elements, polynomials).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands built over different root data or groups.
class DatumMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the mathematical input failed (e.g. non-dominant weight).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request exceeds the configured resource budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heckekit
