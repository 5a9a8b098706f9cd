#pragma once

#include <Eigen/Dense>
#include <utility>

#include "shellrange/quadrics.hpp"

namespace shellrange {

enum class EllipseDegeneracy { Proper, Segment, Point };
std::string to_string(EllipseDegeneracy d);

/// Euclidean data of the numerical-range ellipse: foci are the eigenvalues,
/// the focal half-distance is sqrt(|D|), semi-axes are sqrt((U +- |D|)/2).
struct EllipseData {
  std::pair<Cplx, Cplx> foci;
  double major_semi = 0;
  double minor_semi = 0;
  Cplx center;
  EllipseDegeneracy degenerate = EllipseDegeneracy::Point;
};

/// Dual quadric of the numerical range: the shell dual restricted to rows
/// and columns {1, 2, 4}; its (3,3) entry is 1.
Quadric3 numrange_G(const Mat2C& a);
/// Boundary quadric of the numerical range, -4 adj G^W.
Quadric3 numrange_Q(const Mat2C& a);

EllipseData ellipse_data(const Mat2C& a);

/// Roots of the focal equation (1, i, -f) G (1, i, -f) = 0 of a dual
/// quadric; for numrange_G this is the characteristic equation of A.
std::pair<Cplx, Cplx> numrange_focal_roots(const Quadric3& g);

/// Trace-shift block forms: Q^W = B^{-t} blockdiag(core, -(U^2-|D|^2)) B^{-1}
/// and G^W = B blockdiag(-adj(core)/4, 1) B^t.
struct UhligBlocks {
  Eigen::Matrix3d q_blocks;
  Eigen::Matrix3d g_blocks;
  Eigen::Matrix3d witness;  // the affine trace-shift B
};
UhligBlocks numrange_uhlig_blocks(const Mat2C& a);

}  // namespace shellrange
