#include "shellrange/quadrics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "shellrange/errors.hpp"

namespace shellrange {

std::string to_string(Role4 r) {
  switch (r) {
    case Role4::Shell: return "shell";
    case Role4::ShellDual: return "shell-dual";
    case Role4::Base: return "base";
    case Role4::BaseDual: return "base-dual";
    case Role4::Spec: return "spec";
    case Role4::SpecDual: return "spec-dual";
    case Role4::Bas: return "bas";
  }
  return "?";
}

std::string to_string(Role3 r) {
  switch (r) {
    case Role3::W: return "w";
    case Role3::WDual: return "w-dual";
    case Role3::CR: return "cr";
    case Role3::CRDual: return "cr-dual";
    case Role3::CRBase: return "cr-base";
    case Role3::CRBaseDual: return "cr-base-dual";
  }
  return "?";
}

double Quadric4::operator()(const HPoint3& p) const {
  const HPoint3 q = convert(p, model == Model::PH ? Model::CKBP : model);
  const auto v = q.projective();
  Eigen::Vector4d w(v[0], v[1], v[2], v[3]);
  return w.dot(m * w);
}

double Quadric3::operator()(const HPoint2& p) const {
  const HPoint2 q = convert(p, model == Model::PH ? Model::CKBP : model);
  Eigen::Vector3d w;
  if (q.infinity)
    w << 0, 1, 0;
  else
    w << q.x, q.z, 1;
  return w.dot(m * w);
}

double Quadric3::operator()(Cplx z) const {
  Eigen::Vector3d w(z.real(), z.imag(), 1.0);
  return w.dot(m * w);
}

Eigen::Matrix4d transport4() {
  Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
  t(2, 2) = 1;
  t(2, 3) = 1;
  t(3, 2) = -1;
  t(3, 3) = 1;
  return t;
}

Eigen::Matrix3d transport2() {
  Eigen::Matrix3d t = Eigen::Matrix3d::Identity();
  t(1, 1) = 1;
  t(1, 2) = 1;
  t(2, 1) = -1;
  t(2, 2) = 1;
  return t;
}

namespace {

bool dual_role(Role4 r) {
  return r == Role4::ShellDual || r == Role4::BaseDual || r == Role4::SpecDual;
}
bool dual_role(Role3 r) {
  return r == Role3::WDual || r == Role3::CRDual || r == Role3::CRBaseDual;
}

}  // namespace

Quadric4 to_model(const Quadric4& q, Model target) {
  if (target == Model::PH) throw Error("quadrics are kept in the projective models only");
  if (q.model == target) return q;
  const Eigen::Matrix4d t = transport4();
  Quadric4 out = q;
  out.model = target;
  if (target == Model::CKB) {
    out.m = dual_role(q.role) ? Eigen::Matrix4d(t.inverse() * q.m * t.inverse().transpose())
                              : Eigen::Matrix4d(t.transpose() * q.m * t);
  } else {
    const Eigen::Matrix4d ti = t.inverse();
    out.m = dual_role(q.role) ? Eigen::Matrix4d(t * q.m * t.transpose())
                              : Eigen::Matrix4d(ti.transpose() * q.m * ti);
  }
  return out;
}

Quadric3 to_model(const Quadric3& q, Model target) {
  if (target == Model::PH) throw Error("quadrics are kept in the projective models only");
  if (q.model == target) return q;
  const Eigen::Matrix3d t = transport2();
  Quadric3 out = q;
  out.model = target;
  if (target == Model::CKB) {
    out.m = dual_role(q.role) ? Eigen::Matrix3d(t.inverse() * q.m * t.inverse().transpose())
                              : Eigen::Matrix3d(t.transpose() * q.m * t);
  } else {
    const Eigen::Matrix3d ti = t.inverse();
    out.m = dual_role(q.role) ? Eigen::Matrix3d(t * q.m * t.transpose())
                              : Eigen::Matrix3d(ti.transpose() * q.m * ti);
  }
  return out;
}

Eigen::Matrix4d base_q4(Model model) {
  Eigen::Matrix4d q = Eigen::Matrix4d::Zero();
  if (model == Model::CKB) {
    q.diagonal() << 1, 1, 1, -1;
  } else {
    q(0, 0) = 1;
    q(1, 1) = 1;
    q(2, 3) = -0.5;
    q(3, 2) = -0.5;
  }
  return q;
}

Eigen::Matrix4d base_g4(Model model) { return base_q4(model).inverse(); }

Eigen::Matrix3d base_q3(Model model) {
  Eigen::Matrix3d q = Eigen::Matrix3d::Zero();
  if (model == Model::CKB) {
    q.diagonal() << 1, 1, -1;
  } else {
    q(0, 0) = 1;
    q(1, 2) = -0.5;
    q(2, 1) = -0.5;
  }
  return q;
}

Eigen::Matrix3d base_g3(Model model) { return base_q3(model).inverse(); }

Eigen::Matrix3d adjugate3(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d cof;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      cof(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return cof.transpose();
}

Eigen::Matrix4d adjugate4(const Eigen::Matrix4d& m) {
  Eigen::Matrix4d cof;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Eigen::Matrix3d minor;
      int rr = 0;
      for (int r = 0; r < 4; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < 4; ++c) {
          if (c == j) continue;
          minor(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      cof(i, j) = ((i + j) % 2 ? -1.0 : 1.0) * minor.determinant();
    }
  return cof.transpose();
}

std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m, double tol) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  const double scale = std::max(1.0, m.norm());
  std::vector<double> out;
  out.reserve(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    const auto ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > tol * scale)
      throw Error("real_eigenvalues: unexpectedly complex eigenvalue");
    out.push_back(ev.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int rank_of(const Eigen::MatrixXd& m, double threshold) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++r;
  return r;
}

namespace detail {

Eigen::Matrix4d shell_q_spec_ckbp(const FiveData& f) {
  const Cplx tr(f.re_tr, f.im_tr), det(f.re_det, f.im_det);
  const double tr2 = std::norm(tr);
  const Cplx dct = det * std::conj(tr);
  Eigen::Matrix4d q;
  q << tr2 / 2 + 2 * f.re_det, 2 * f.im_det, -f.re_tr, -dct.real(),
      2 * f.im_det, tr2 / 2 - 2 * f.re_det, -f.im_tr, -dct.imag(),
      -f.re_tr, -f.im_tr, 1, tr2 / 4,
      -dct.real(), -dct.imag(), tr2 / 4, std::norm(det);
  return q;
}

Eigen::Matrix4d shell_q_ckbp(const FiveData& f) {
  const double u = f.tr_gram / 2 - (f.re_tr * f.re_tr + f.im_tr * f.im_tr) / 4;
  return 2.0 * u * base_q4(Model::CKBP) + shell_q_spec_ckbp(f);
}

Eigen::Matrix4d shell_g_spec_ckbp(const FiveData& f) {
  const Cplx tr(f.re_tr, f.im_tr), det(f.re_det, f.im_det);
  const double tr2 = std::norm(tr);
  const Cplx dct = det * std::conj(tr);
  Eigen::Matrix4d g;
  g << (tr2 + 4 * f.re_det) / 8, f.im_det / 2, dct.real() / 2, f.re_tr / 2,
      f.im_det / 2, (tr2 - 4 * f.re_det) / 8, dct.imag() / 2, f.im_tr / 2,
      dct.real() / 2, dct.imag() / 2, std::norm(det), tr2 / 4,
      f.re_tr / 2, f.im_tr / 2, tr2 / 4, 1;
  return g;
}

Eigen::Matrix4d shell_g_ckbp(const FiveData& f) {
  const double u = f.tr_gram / 2 - (f.re_tr * f.re_tr + f.im_tr * f.im_tr) / 4;
  Eigen::Matrix4d bas = Eigen::Matrix4d::Zero();
  bas(0, 0) = bas(1, 1) = -0.5;
  bas(2, 3) = bas(3, 2) = 1.0;
  return u * bas + shell_g_spec_ckbp(f);
}

Eigen::Matrix3d cr_q_ckbp(const ReducedFiveData& r) {
  const double v = r.v, w = r.w, x = r.x, y = r.y, z = r.z;
  Eigen::Matrix3d q;
  q << z * z - 4 * y, 2 * x - v * z, 2 * v * y - x * z,
      2 * x - v * z, z - w + v * v, w * z / 2 - v * x - z * z / 2,
      2 * v * y - x * z, w * z / 2 - v * x - z * z / 2, x * x - y * w + y * z;
  return q;
}

Eigen::Matrix3d cr_g_ckbp(const ReducedFiveData& r) {
  Eigen::Matrix3d g;
  g << (r.w - r.z) / 4, r.x / 2, r.v / 2,
      r.x / 2, r.y, r.z / 2,
      r.v / 2, r.z / 2, 1;
  return g;
}

}  // namespace detail

}  // namespace shellrange
