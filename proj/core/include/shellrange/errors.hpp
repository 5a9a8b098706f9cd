#pragma once

#include <stdexcept>
#include <string>

namespace shellrange {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input rejected at construction (non-finite entries, malformed literals).
struct InvalidInput : Error {
  using Error::Error;
};

/// cA + dI is not invertible, i.e. -d/c lies in the spectrum.
struct SingularResolvent : Error {
  using Error::Error;
};

/// A point at infinity was produced but the target model cannot hold it.
struct InfinityNotRepresentable : Error {
  using Error::Error;
};

/// Quadratic focal equation has a vanishing leading coefficient.
struct DegenerateFocalEquation : Error {
  using Error::Error;
};

/// Operation requires a different spectral class than the argument has.
struct WrongSpectralClass : Error {
  using Error::Error;
};

/// Operation is only defined for matrices with no real eigenvalue.
struct RealEigenvalue : WrongSpectralClass {
  using WrongSpectralClass::WrongSpectralClass;
};

/// C1/C2 are undefined for real scalar matrices.
struct UndefinedForRealScalar : Error {
  using Error::Error;
};

/// Pivot entry is zero in an elimination / inverse-restrict projection.
struct SingularPivot : Error {
  using Error::Error;
};

/// A rotation angle whose Moebius pole hits the spectrum.
struct SingularRotation : Error {
  using Error::Error;
};

/// The given 3x3 matrix cannot be the quadric of any conformal range.
struct NotAConformalRangeQuadric : Error {
  using Error::Error;
};

/// The zero quadric: every real scalar matrix maps to it.
struct UnderdeterminedRealScalar : Error {
  using Error::Error;
};

}  // namespace shellrange
