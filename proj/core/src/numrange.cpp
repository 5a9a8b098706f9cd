#include "shellrange/numrange.hpp"

#include <cmath>

#include "shellrange/errors.hpp"
#include "shellrange/shell.hpp"

namespace shellrange {

std::string to_string(EllipseDegeneracy d) {
  switch (d) {
    case EllipseDegeneracy::Proper: return "proper";
    case EllipseDegeneracy::Segment: return "segment";
    case EllipseDegeneracy::Point: return "point";
  }
  return "?";
}

Quadric3 numrange_G(const Mat2C& a) {
  const Eigen::Matrix4d g4 = detail::shell_g_ckbp(five_data(a));
  Quadric3 g;
  g.model = Model::CKBP;
  g.role = Role3::WDual;
  const int idx[3] = {0, 1, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.m(i, j) = g4(idx[i], idx[j]);
  g.degenerate = a.is_normal();
  return g;
}

Quadric3 numrange_Q(const Mat2C& a) {
  Quadric3 q;
  q.model = Model::CKBP;
  q.role = Role3::W;
  q.m = -4.0 * adjugate3(numrange_G(a).m);
  q.degenerate = a.is_normal();
  return q;
}

EllipseData ellipse_data(const Mat2C& a) {
  const InvariantSet inv = invariants(a);
  EllipseData e;
  e.foci = eigenvalues(a);
  e.major_semi = std::sqrt(std::max(0.0, (inv.u + inv.abs_d) / 2));
  e.minor_semi = std::sqrt(std::max(0.0, (inv.u - inv.abs_d) / 2));
  e.center = a.trace() / 2.0;
  const double eps = kClassifyTol * std::max(1.0, inv.u);
  if (inv.u - inv.abs_d > eps)
    e.degenerate = EllipseDegeneracy::Proper;
  else if (inv.abs_d > eps)
    e.degenerate = EllipseDegeneracy::Segment;
  else
    e.degenerate = EllipseDegeneracy::Point;
  return e;
}

std::pair<Cplx, Cplx> numrange_focal_roots(const Quadric3& g) {
  if (g.role != Role3::WDual) throw Error("numrange_focal_roots: WDual quadric required");
  const Eigen::Matrix3d& m = g.m;
  // (1, i, -f)^t M (1, i, -f) = 0 as a quadratic in f.
  const Cplx lead = m(2, 2);
  const Cplx lin = -2.0 * Cplx(m(0, 2), m(1, 2));
  const Cplx cst = Cplx(m(0, 0) - m(1, 1), 2.0 * m(0, 1));
  if (std::abs(lead) < 1e-14 * (1.0 + m.norm()))
    throw DegenerateFocalEquation("numrange_focal_roots: leading coefficient vanishes");
  const Cplx mu = principal_sqrt(lin * lin - 4.0 * lead * cst);
  return {(-lin + mu) / (2.0 * lead), (-lin - mu) / (2.0 * lead)};
}

UhligBlocks numrange_uhlig_blocks(const Mat2C& a) {
  const FiveData f = five_data(a);
  const InvariantSet inv = invariants(a);
  const double disc = inv.u * inv.u - inv.abs_d * inv.abs_d;

  UhligBlocks out;
  out.witness = Eigen::Matrix3d::Identity();
  out.witness(0, 2) = f.re_tr / 2;
  out.witness(1, 2) = f.im_tr / 2;

  out.q_blocks = Eigen::Matrix3d::Zero();
  out.q_blocks.topLeftCorner<2, 2>() = shell_core_Q(a);
  out.q_blocks(2, 2) = -disc;

  out.g_blocks = Eigen::Matrix3d::Zero();
  out.g_blocks.topLeftCorner<2, 2>() = shell_core_G(a);
  out.g_blocks(2, 2) = 1;
  return out;
}

}  // namespace shellrange
