#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Base of every error raised by the library. Each subclass maps to one CLI
/// exit code (see expcli/runner.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration, schema violation, inconsistent group data.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A declared element budget would be (or was) exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A certificate or structural invariant failed an audit.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Sampler or grid too coarse for the requested radius.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the regime where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitlab
