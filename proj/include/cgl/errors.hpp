#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input that is not a (negated) fundamental discriminant, or forms of
/// mismatched discriminant.
class DiscriminantError : public Error {
 public:
  using Error::Error;
};

/// A request beyond a configured table size (sieve, AFE length, guardrail).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Raised when the resonator set would exceed its enumeration cap.
class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::string what, double log_true_size)
      : Error(std::move(what)), log_true_size_(log_true_size) {}

  /// Natural log of the exact size of the set that was not materialized.
  double log_true_size() const { return log_true_size_; }

 private:
  double log_true_size_;
};

}  // namespace cgl
