#pragma once

#include <array>
#include <string>

#include "shellrange/complex_ops.hpp"
#include "shellrange/xreal.hpp"

namespace shellrange {

/// Coordinate models of the asymptotically closed hyperbolic space:
/// CKBP (paraboloid variant, z >= x^2 + y^2), CKB (unit ball), PH
/// (Poincare half-space, z >= 0).
enum class Model { CKBP, CKB, PH };

std::string to_string(Model m);

/// Point of the asymptotically closed hyperbolic 3-space. Boundary points
/// are admitted (asymptotic); the single point at infinity of CKBP / PH is
/// carried as an explicit tag (it is CKB (0,0,1)).
struct HPoint3 {
  Model model = Model::CKBP;
  double x = 0, y = 0, z = 0;
  bool infinity = false;

  HPoint3() = default;
  HPoint3(Model m, double x_, double y_, double z_);
  static HPoint3 at_infinity(Model m);

  bool interior(double tol = 1e-12) const;
  bool asymptotic(double tol = 1e-12) const;
  /// Projective 4-tuple; for CKBP this is (x, y, z, 1) or (0, 0, 1, 0) at
  /// infinity, for CKB (x, y, z, 1), for PH the CKBP tuple of the image.
  std::array<double, 4> projective() const;
};

/// Point of the asymptotically closed hyperbolic plane (second coordinate
/// dropped).
struct HPoint2 {
  Model model = Model::CKBP;
  double x = 0, z = 0;
  bool infinity = false;

  HPoint2() = default;
  HPoint2(Model m, double x_, double z_);
  static HPoint2 at_infinity(Model m);

  bool interior(double tol = 1e-12) const;
  bool asymptotic(double tol = 1e-12) const;
};

/// Model conversion. The result may be the tagged point at infinity; with
/// allow_infinity = false that case throws InfinityNotRepresentable.
HPoint3 convert(const HPoint3& p, Model target, bool allow_infinity = true);
HPoint2 convert(const HPoint2& p, Model target, bool allow_infinity = true);

/// Embeddings of the Riemann sphere into the asymptotic boundary.
HPoint3 iota(Cplx lambda, Model model);
HPoint2 iota2(Cplx lambda, Model model);

/// Hyperbolic distance; +inf as soon as an asymptotic point is involved.
/// Points in different models are converted first.
XReal distance3(const HPoint3& p, const HPoint3& q);
XReal distance2(const HPoint2& p, const HPoint2& q);

/// Oriented distance from the horosphere z_PH = 1 (negative inside it).
double horo_distance(const HPoint3& p);
double horo_distance(const HPoint2& p);

/// -(1/2) log z_CKBP = -artanh z_CKB = -log sqrt(x^2+y^2+z^2)_PH.
double norm_distance(const HPoint3& p);

/// Busemann function of the asymptotic point P in the CKB plane, anchored
/// at the origin: b_P(x) = log((1 - P.x)/sqrt(1-|x|^2)). Grows away from P.
double busemann_ckb2(const HPoint2& asym, const HPoint2& p);

/// Distance from an interior point to the h-line with asymptotic endpoints
/// a and b (all in the CKB plane).
double hline_distance2(const HPoint2& p, const HPoint2& a, const HPoint2& b);

/// arcosh with arguments within 1e-12 below 1 clamped to 1.
double safe_acosh(double t);

}  // namespace shellrange
