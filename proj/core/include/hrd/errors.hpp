#pragma once

#include <stdexcept>
#include <string>

namespace hrd {

// Error taxonomy shared across the library. The CLI maps these onto its
// exit codes: configuration/usage -> 1, bad data or shapes -> 2,
// numerical failure -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor/matrix shape mismatch.
struct DimensionError : Error {
  using Error::Error;
};

// Inconsistent or invalid configuration (bad flag values, mismatched
// analysis parameters, malformed config files).
struct ConfigError : Error {
  using Error::Error;
};

// Malformed or unusable input data (files, clips, matrices).
struct InputError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Index or step count outside the permitted range.
struct RangeError : Error {
  using Error::Error;
};

// Divergence, non-finite values, impossible normalization.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace hrd
