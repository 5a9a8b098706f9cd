#pragma once

#include <Eigen/Core>

#include "shellrange/invariants.hpp"
#include "shellrange/mat2.hpp"

namespace shellrange {

enum class Model;  // models.hpp

/// Fractional linear map  f(l) = (a l + b)/(c l + d),  ad - bc != 0.
/// RealCoefficients maps act on the conformal range; general complex ones
/// on the whole shell.
struct MobiusMap {
  enum class Kind { RealCoefficients, ComplexCoefficients };

  Cplx a, b, c, d;
  Kind kind;

  MobiusMap(Cplx a_, Cplx b_, Cplx c_, Cplx d_);
  static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }
  static MobiusMap real(double a_, double b_, double c_, double d_) {
    return MobiusMap(a_, b_, c_, d_);
  }

  Cplx determinant() const { return a * d - b * c; }
  bool is_real() const { return kind == Kind::RealCoefficients; }
  /// Pole -d/c; only meaningful when c != 0.
  Cplx pole() const { return -d / c; }

  MobiusMap inverse() const { return MobiusMap(d, -b, -c, a); }
  friend MobiusMap compose(const MobiusMap& f, const MobiusMap& g) {
    return MobiusMap(f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                     f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d);
  }

  Cplx operator()(Cplx z) const { return (a * z + b) / (c * z + d); }
};

/// f(A) = (aA + bI)(cA + dI)^{-1}. Throws SingularResolvent when -d/c is an
/// eigenvalue of A.
Mat2C mobius_apply(const MobiusMap& f, const Mat2C& a);

/// The positive factor C(f, A) by which every quadric of A rescales under f.
/// Strictly positive iff f is applicable to A, zero iff -d/c is in the
/// spectrum.
double scaling_factor(const MobiusMap& f, const Mat2C& a);

/// Linear action of f on projective coordinates (Re l, Im l, |l|^2, 1),
/// normalized to determinant 1 (transported by similarity for CKB).
Eigen::Matrix4d mobius_projective_rep(const MobiusMap& f, Model model);

/// Order-two analogue on (Re l, |l|^2, 1) for real-coefficient maps,
/// normalized to |det| = 1. Throws WrongSpectralClass for complex maps.
Eigen::Matrix3d mobius_projective_rep2(const MobiusMap& f, Model model);

}  // namespace shellrange
