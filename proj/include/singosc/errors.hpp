#pragma once

#include <stdexcept>
#include <string>

namespace singosc {

// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coupling at or below the fall-to-center threshold.
struct CollapseError : Error {
  using Error::Error;
};

// Numeric argument outside its admissible range (rho, omega, ...).
struct RangeError : Error {
  using Error::Error;
};

// Generating function evaluated at its pole z = 1/rho.
struct PoleError : Error {
  using Error::Error;
};

// Frequency profile not flat enough at the match-window endpoints.
struct AsymptoteError : Error {
  using Error::Error;
};

// Conserved bilinear of the classical solution drifted past tolerance.
struct WronskianError : Error {
  using Error::Error;
};

// Requested level too close to the top of the truncated basis.
struct TruncationError : Error {
  using Error::Error;
};

// State norm drifted past tolerance during propagation.
struct NormDriftError : Error {
  using Error::Error;
};

// Probability weight reached the top of the truncated basis.
struct LeakageError : Error {
  using Error::Error;
};

// Malformed input text (profile tables, config files).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace singosc
