#include "shellrange/shell.hpp"

#include <cmath>

#include "shellrange/errors.hpp"

namespace shellrange {

std::string to_string(ShellKind k) {
  switch (k) {
    case ShellKind::PointCase: return "point";
    case ShellKind::LineCase: return "line";
    case ShellKind::Horosphere: return "horosphere";
    case ShellKind::Tube: return "tube";
  }
  return "?";
}

Quadric4 shell_Q(const Mat2C& a, Model model) {
  Quadric4 q;
  q.model = Model::CKBP;
  q.role = Role4::Shell;
  q.m = detail::shell_q_ckbp(five_data(a));
  q.degenerate = a.is_normal();
  return to_model(q, model);
}

Quadric4 shell_G(const Mat2C& a, Model model) {
  Quadric4 g;
  g.model = Model::CKBP;
  g.role = Role4::ShellDual;
  g.m = detail::shell_g_ckbp(five_data(a));
  g.degenerate = a.is_normal();
  return to_model(g, model);
}

std::pair<Quadric4, Quadric4> shell_pencil_members(const Mat2C& a, Model model) {
  const FiveData f = five_data(a);
  const InvariantSet inv = invariants(a);
  Quadric4 axis, biplanar;
  axis.model = biplanar.model = Model::CKBP;
  axis.role = biplanar.role = Role4::Shell;
  axis.degenerate = biplanar.degenerate = true;
  const Eigen::Matrix4d spec = detail::shell_q_spec_ckbp(f);
  axis.m = 2.0 * inv.abs_d * base_q4(Model::CKBP) + spec;
  biplanar.m = -2.0 * inv.abs_d * base_q4(Model::CKBP) + spec;
  return {to_model(axis, model), to_model(biplanar, model)};
}

std::pair<std::vector<double>, std::vector<double>> shell_eigen_ratios(const Mat2C& a) {
  const Eigen::Matrix4d q = detail::shell_q_ckbp(five_data(a));
  const Eigen::Matrix4d g = detail::shell_g_ckbp(five_data(a));
  const Eigen::Matrix4d q0 = base_q4(Model::CKBP);
  return {real_eigenvalues(q0.inverse() * q), real_eigenvalues(g * q0)};
}

HPoint3 shell_center(const Mat2C& a) {
  const FiveData f = five_data(a);
  return HPoint3(Model::CKBP, f.re_tr / 2, f.im_tr / 2, f.tr_gram / 2);
}

ShellGeometry shell_geometry(const Mat2C& a) {
  const InvariantSet inv = invariants(a);
  const auto [l1, l2] = eigenvalues(a);
  const double eps = kClassifyTol * std::max(1.0, inv.u);
  const bool normal = inv.u - inv.abs_d <= eps;
  const bool parabolic = inv.abs_d <= eps;

  ShellGeometry g;
  g.asymptotic_points = {l1, l2};
  g.center = shell_center(a);
  if (normal && parabolic) {
    g.kind = ShellKind::PointCase;
    g.radius = XReal(0.0);
  } else if (normal) {
    g.kind = ShellKind::LineCase;
    g.radius = XReal(0.0);
  } else if (parabolic) {
    g.kind = ShellKind::Horosphere;
    g.radius = XReal::inf();
  } else {
    g.kind = ShellKind::Tube;
    g.radius = XReal(0.5 * safe_acosh(inv.u / inv.abs_d));
  }
  return g;
}

namespace {

// Quotient Q^spec(p) / (-2 Q*(p)) at an interior point, the model-free
// measure of how far p sits from the spectral configuration.
double spec_quotient(const Mat2C& a, const HPoint3& p) {
  const HPoint3 q = convert(p, Model::CKBP);
  if (q.infinity || !q.interior(0.0)) throw Error("interior point required");
  const auto pv = q.projective();
  Eigen::Vector4d v(pv[0], pv[1], pv[2], pv[3]);
  const double num = v.dot(detail::shell_q_spec_ckbp(five_data(a)) * v);
  const double den = -2.0 * v.dot(base_q4(Model::CKBP) * v);
  return num / den;
}

}  // namespace

XReal shell_axis_distance(const Mat2C& a, const HPoint3& p) {
  const InvariantSet inv = invariants(a);
  const double eps = kClassifyTol * std::max(1.0, inv.u);
  if (inv.abs_d <= eps) return XReal::inf();  // axis degenerates to a boundary point
  return XReal(0.5 * safe_acosh(spec_quotient(a, p) / inv.abs_d));
}

XReal shell_signed_distance(const Mat2C& a, const HPoint3& p) {
  const InvariantSet inv = invariants(a);
  const double q = spec_quotient(a, p);
  const double num = std::sqrt(std::max(0.0, q * q - inv.abs_d * inv.abs_d)) -
                     std::sqrt(std::max(0.0, inv.u * inv.u - inv.abs_d * inv.abs_d));
  const double den = q + inv.u;
  if (den == 0.0) return XReal(0.0);
  const double r = num / den;
  if (r >= 1.0) return XReal::inf();
  if (r <= -1.0) return XReal::neg_inf();
  return XReal(std::atanh(r));
}

ShellDistances shell_characteristic_distances(const Mat2C& a) {
  const InvariantSet inv = invariants(a);
  const FiveData f = five_data(a);
  const Cplx tr(f.re_tr, f.im_tr), det(f.re_det, f.im_det);
  ShellDistances out;

  const double o = std::norm(det) / 2 + std::norm(tr) / 4 + 0.5;
  const double dd = inv.abs_d * inv.abs_d;
  out.dis_origin = std::atanh((std::sqrt(std::max(0.0, o * o - dd)) -
                               std::sqrt(std::max(0.0, inv.u * inv.u - dd))) /
                              (o + inv.u));

  out.dis_horo = -0.5 * std::log(inv.u + std::sqrt(std::max(0.0, inv.u * inv.u - dd)));

  const double nrm = norm_conorm(a).first;
  out.dis_norm = nrm == 0.0 ? XReal::inf() : XReal(-std::log(nrm));
  return out;
}

Eigen::Matrix4d shell_sample_matrix(const Mat2C& m) {
  const Cplx a = m.a11, b = m.a12, c = m.a21, d = m.a22;
  Eigen::Matrix4d s;
  s << ((b + c) / 2.0).real(), ((b - c) / 2.0).imag(), ((a - d) / 2.0).real(),
      ((a + d) / 2.0).real(),
      ((b + c) / 2.0).imag(), ((c - b) / 2.0).real(), ((a - d) / 2.0).imag(),
      ((a + d) / 2.0).imag(),
      (std::conj(a) * b + std::conj(c) * d).real(), (std::conj(a) * b + std::conj(c) * d).imag(),
      (std::norm(a) - std::norm(b) + std::norm(c) - std::norm(d)) / 2,
      (std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d)) / 2,
      0, 0, 0, 1;
  return s;
}

Eigen::Matrix2d shell_core_Q(const Mat2C& a) {
  const FiveData f = five_data(a);
  const Cplx tr(f.re_tr, f.im_tr);
  Eigen::Matrix2d q;
  q << f.tr_gram - f.re_tr * f.re_tr + 2 * f.re_det,
      -f.re_tr * f.im_tr + 2 * f.im_det,
      -f.re_tr * f.im_tr + 2 * f.im_det,
      f.tr_gram - f.im_tr * f.im_tr - 2 * f.re_det;
  return q;
}

Eigen::Matrix2d shell_core_G(const Mat2C& a) {
  const Eigen::Matrix2d q = shell_core_Q(a);
  Eigen::Matrix2d adj;
  adj << q(1, 1), -q(0, 1), -q(1, 0), q(0, 0);
  return -0.25 * adj;
}

ShellBlocks shell_block_decomposition(const Mat2C& a) {
  const FiveData f = five_data(a);
  const InvariantSet inv = invariants(a);
  const double disc = inv.u * inv.u - inv.abs_d * inv.abs_d;

  Eigen::Matrix4d bmat = Eigen::Matrix4d::Identity();
  bmat(0, 3) = f.re_tr / 2;
  bmat(1, 3) = f.im_tr / 2;
  bmat(2, 0) = f.re_tr;
  bmat(2, 1) = f.im_tr;
  bmat(2, 3) = f.tr_gram / 2;

  ShellBlocks out;
  out.q_blocks = Eigen::Matrix4d::Zero();
  out.q_blocks.topLeftCorner<2, 2>() = shell_core_Q(a);
  out.q_blocks(2, 2) = 1;
  out.q_blocks(3, 3) = -disc;
  out.g_blocks = Eigen::Matrix4d::Zero();
  out.g_blocks.topLeftCorner<2, 2>() = shell_core_G(a);
  out.g_blocks(2, 2) = -disc;
  out.g_blocks(3, 3) = 1;
  out.q_witness = bmat.inverse();
  out.g_witness = bmat.transpose();
  return out;
}

Eigen::Matrix4d shell_similarity_witness(const Mat2C& a) {
  const FiveData f = five_data(a);
  Eigen::Matrix4d s;
  s << 0, -1, 0, f.re_tr / 2 + f.im_tr / 2,
      1, 0, 0, -f.re_tr / 2 + f.im_tr / 2,
      f.re_tr + f.im_tr, -f.re_tr + f.im_tr, -1, 0,
      0, 0, 0, 1;
  return s;
}

FiveData five_data_from_shell(const Quadric4& q) {
  const Quadric4 p = to_model(q, Model::CKBP);
  const double m33 = p.m(2, 2);
  if (std::abs(m33) < 1e-14) throw Error("five_data_from_shell: (3,3) entry vanishes");
  const Eigen::Matrix4d m = p.m / m33;
  FiveData f;
  f.re_tr = -m(0, 2);
  f.im_tr = -m(1, 2);
  const double tr2 = f.re_tr * f.re_tr + f.im_tr * f.im_tr;
  f.tr_gram = tr2 - 2.0 * m(2, 3);
  f.re_det = (m(0, 0) - m(1, 1)) / 4.0;
  f.im_det = m(0, 1) / 2.0;
  return f;
}

std::pair<double, double> shell_vertical_diameter(const Mat2C& a) {
  const InvariantSet inv = invariants(a);
  const double mid = a.gram_trace() / 2.0;
  const double half = std::sqrt(std::max(0.0, inv.u * inv.u - inv.abs_d * inv.abs_d));
  return {mid - half, mid + half};
}

}  // namespace shellrange
