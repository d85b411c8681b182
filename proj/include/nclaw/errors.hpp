#pragma once

#include <stdexcept>
#include <string>

namespace nclaw {

// Base class for all nclaw exceptions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// shock_speed called with identical states; the caller wants f'(u).
struct EqualStates : Error {
  using Error::Error;
};

// A bracketed root search (tangent map, chord root, rarefaction
// inversion for custom fluxes) failed to converge.
struct NoConvergence : Error {
  using Error::Error;
};

// Kinetic function violates the admissibility bounds on the interval
// spanned by the Riemann data and its images.
struct InvalidKinetics : Error {
  using Error::Error;
};

// Empty or inverted domain interval, or too few cells.
struct BadDomain : Error {
  using Error::Error;
};

// Convergence fit requested on degenerate data (all errors zero, or
// fewer than two usable mesh levels).
struct DegenerateFit : Error {
  using Error::Error;
};

// Bad configuration file or flag combination; message carries the
// offending line/field.
struct ConfigError : Error {
  using Error::Error;
};

// A state became non-finite or a scheme invariant broke at runtime.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace nclaw
