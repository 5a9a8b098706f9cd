#pragma once

#include <array>
#include <string>
#include <utility>

#include "shellrange/mat2.hpp"

namespace shellrange {

/// The five unitary-invariant real numbers that determine a 2x2 complex
/// matrix up to unitary conjugation.
struct FiveData {
  double re_tr = 0;
  double im_tr = 0;
  double re_det = 0;
  double im_det = 0;
  double tr_gram = 0;  // tr(A*A) >= 0

  std::array<double, 5> as_array() const { return {re_tr, im_tr, re_det, im_det, tr_gram}; }
};

/// The five real-Moebius-relevant invariants (V, W, X, Y, Z); they determine
/// the conformal range and nothing more.
struct ReducedFiveData {
  double v = 0;  // Re tr A
  double w = 0;  // |tr A|^2 + 2 Re det A
  double x = 0;  // Re((det A) conj(tr A))
  double y = 0;  // |det A|^2
  double z = 0;  // tr(A*A)

  std::array<double, 5> as_array() const { return {v, w, x, y, z}; }
};

enum class SpectralClass {
  RealElliptic,      // conjugate strictly complex pair
  RealParabolic,     // equal real eigenvalues
  RealHyperbolic,    // distinct real eigenvalues
  NonRealParabolic,  // equal strictly complex eigenvalues
  SemiReal,          // one real, one strictly complex
  QuasiElliptic,     // Im l1 * Im l2 < 0, non-conjugate
  QuasiHyperbolic,   // Im l1 * Im l2 > 0
};

std::string to_string(SpectralClass c);

/// Scalar invariants attached to a matrix. U is the metric discriminant,
/// D the (negated) spectral discriminant; E, K, H classify the spectrum
/// together with |D|; B is the square-root-like companion of E.
struct InvariantSet {
  double u = 0;       // >= absD; equality iff normal
  Cplx d;             // det A - (tr A)^2 / 4
  double abs_d = 0;   // |D|
  double e = 0;       // |(l1 - conj l2)/2|^2
  double k = 0;       // ((Im l1)^2 + (Im l2)^2)/2
  double h = 0;       // Im l1 * Im l2 = E - |D|
  Cplx b;             // Im(tr A)/2 + i Im(sqrt(D))
  SpectralClass cls = SpectralClass::RealParabolic;
};

/// Unitary-congruence normal form [[l1, t],[0, l2]] with t >= 0.
struct TriangularForm {
  Cplx lam1, lam2;
  double t = 0;

  Mat2C matrix() const { return Mat2C::triangular(lam1, lam2, t); }
};

FiveData five_data(const Mat2C& a);
ReducedFiveData reduced_five_data(const Mat2C& a);
ReducedFiveData reduced_from_five(const FiveData& f);

/// Classification tolerance: a derived quantity q counts as zero when
/// |q| <= tol * max(1, U_A). All class-defining quantities scale
/// quadratically with the matrix, so U_A is the natural scale.
inline constexpr double kClassifyTol = 1e-9;

InvariantSet invariants(const Mat2C& a, double tol = kClassifyTol);

/// Eigenvalues tr(A)/2 +- principal_sqrt(-D_A); the "+" branch comes first.
std::pair<Cplx, Cplx> eigenvalues(const Mat2C& a);

/// Returns the triangular form together with a unitary Q such that
/// Q* A Q = [[l1, t],[0, l2]].
std::pair<TriangularForm, Mat2C> canonical_triangular(const Mat2C& a);

/// Spectral norm and co-norm (smallest singular value); their product is
/// |det A|.
std::pair<double, double> norm_conorm(const Mat2C& a);

}  // namespace shellrange
