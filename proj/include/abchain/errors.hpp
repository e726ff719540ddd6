#pragma once

#include <stdexcept>

namespace abchain {

// Bad geometry, couplings, grids, or mismatched dimensions.
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical breakdown (eigensolver non-convergence and the like).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Peak search window contained no interior maximum.
struct PeakNotFoundError : NumericalError {
  using NumericalError::NumericalError;
};

// Second injection requested while the target site carries non-negligible
// occupation; the coefficient-mapping injection model is no longer valid.
struct InjectionError : NumericalError {
  using NumericalError::NumericalError;
};

// Density matrix failed physicality checks (negative eigenvalue beyond
// round-off tolerance).
struct InvalidStateError : NumericalError {
  using NumericalError::NumericalError;
};

// Output files could not be written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace abchain
