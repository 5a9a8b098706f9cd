#include "shellrange/invariants.hpp"

#include <cmath>

#include "shellrange/errors.hpp"

namespace shellrange {

std::string to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::RealElliptic: return "real-elliptic";
    case SpectralClass::RealParabolic: return "real-parabolic";
    case SpectralClass::RealHyperbolic: return "real-hyperbolic";
    case SpectralClass::NonRealParabolic: return "non-real-parabolic";
    case SpectralClass::SemiReal: return "semi-real";
    case SpectralClass::QuasiElliptic: return "quasielliptic";
    case SpectralClass::QuasiHyperbolic: return "quasihyperbolic";
  }
  return "?";
}

FiveData five_data(const Mat2C& a) {
  FiveData f;
  const Cplx tr = a.trace(), det = a.det();
  f.re_tr = tr.real();
  f.im_tr = tr.imag();
  f.re_det = det.real();
  f.im_det = det.imag();
  f.tr_gram = a.gram_trace();
  return f;
}

ReducedFiveData reduced_from_five(const FiveData& f) {
  ReducedFiveData r;
  const Cplx tr(f.re_tr, f.im_tr), det(f.re_det, f.im_det);
  r.v = f.re_tr;
  r.w = std::norm(tr) + 2.0 * f.re_det;
  r.x = (det * std::conj(tr)).real();
  r.y = std::norm(det);
  r.z = f.tr_gram;
  return r;
}

ReducedFiveData reduced_five_data(const Mat2C& a) { return reduced_from_five(five_data(a)); }

InvariantSet invariants(const Mat2C& a, double tol) {
  InvariantSet s;
  const Cplx tr = a.trace(), det = a.det();
  s.d = det - tr * tr / 4.0;
  s.abs_d = std::abs(s.d);
  s.u = a.gram_trace() / 2.0 - std::norm(tr) / 4.0;
  const double im_half = tr.imag() / 2.0;
  s.e = im_half * im_half + (s.abs_d - s.d.real()) / 2.0;
  s.k = im_half * im_half + (s.abs_d + s.d.real()) / 2.0;
  s.h = s.e - s.abs_d;
  s.b = Cplx(im_half, principal_sqrt(s.d).imag());

  // Sign table on (|D|, E, K, H); each quantity is "zero" below tol*max(1,U).
  const double eps = tol * std::max(1.0, s.u);
  const bool dz = s.abs_d <= eps, ez = s.e <= eps, kz = s.k <= eps;
  const bool hz = std::abs(s.h) <= eps;
  if (dz && ez) {
    s.cls = SpectralClass::RealParabolic;
  } else if (dz) {
    s.cls = SpectralClass::NonRealParabolic;
  } else if (ez) {
    s.cls = SpectralClass::RealElliptic;
  } else if (kz) {
    s.cls = SpectralClass::RealHyperbolic;
  } else if (hz) {
    s.cls = SpectralClass::SemiReal;
  } else if (s.h < 0) {
    s.cls = SpectralClass::QuasiElliptic;
  } else {
    s.cls = SpectralClass::QuasiHyperbolic;
  }
  return s;
}

std::pair<Cplx, Cplx> eigenvalues(const Mat2C& a) {
  const Cplx tr = a.trace();
  const Cplx d = a.det() - tr * tr / 4.0;
  const Cplx mu = principal_sqrt(-d);
  return {tr / 2.0 + mu, tr / 2.0 - mu};
}

std::pair<TriangularForm, Mat2C> canonical_triangular(const Mat2C& a) {
  const auto [l1, l2] = eigenvalues(a);

  // Eigenvector of l1 from the larger row of A - l1*I; falls back to e1
  // when A is already diagonal with a11 = l1.
  Cplx v1(1, 0), v2(0, 0);
  const Cplx r1a = a.a11 - l1, r1b = a.a12;
  const Cplx r2a = a.a21, r2b = a.a22 - l1;
  const double n1 = std::norm(r1a) + std::norm(r1b);
  const double n2 = std::norm(r2a) + std::norm(r2b);
  if (n1 >= n2 && n1 > 0) {
    v1 = r1b;
    v2 = -r1a;
  } else if (n2 > 0) {
    v1 = r2b;
    v2 = -r2a;
  }
  double nv = std::sqrt(std::norm(v1) + std::norm(v2));
  if (nv == 0.0) {
    v1 = 1;
    v2 = 0;
    nv = 1;
  }
  v1 /= nv;
  v2 /= nv;

  // Unitary completion: the orthogonal complement of (v1, v2).
  Cplx w1 = -std::conj(v2), w2 = std::conj(v1);
  Mat2C q(v1, w1, v2, w2);

  // Phase on the second column forces the off-diagonal entry real >= 0.
  Mat2C t = q.adjoint() * a * q;
  const Cplx off = t.a12;
  if (std::abs(off) > 0) {
    const Cplx phase = std::conj(off) / std::abs(off);
    q = q * Mat2C::diag(1, phase);
    t = q.adjoint() * a * q;
  }

  TriangularForm form;
  form.lam1 = l1;
  form.lam2 = l2;
  form.t = std::abs(t.a12);
  return {form, q};
}

std::pair<double, double> norm_conorm(const Mat2C& a) {
  const double z = a.gram_trace();
  const double ad = std::abs(a.det());
  const double p = std::sqrt(std::max(0.0, z + 2.0 * ad));
  const double m = std::sqrt(std::max(0.0, z - 2.0 * ad));
  return {(p + m) / 2.0, (p - m) / 2.0};
}

}  // namespace shellrange
