#include "shellrange/mobius.hpp"

#include <cmath>

#include "shellrange/errors.hpp"
#include "shellrange/quadrics.hpp"

namespace shellrange {

MobiusMap::MobiusMap(Cplx a_, Cplx b_, Cplx c_, Cplx d_) : a(a_), b(b_), c(c_), d(d_) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d))
    throw InvalidInput("MobiusMap: non-finite coefficient");
  if (a * d - b * c == Cplx(0, 0))
    throw InvalidInput("MobiusMap: degenerate coefficients (ad - bc = 0)");
  const bool real_coeffs =
      a.imag() == 0.0 && b.imag() == 0.0 && c.imag() == 0.0 && d.imag() == 0.0;
  kind = real_coeffs ? Kind::RealCoefficients : Kind::ComplexCoefficients;
}

Mat2C mobius_apply(const MobiusMap& f, const Mat2C& m) {
  const Mat2C num = f.a * m + Mat2C::diag(f.b, f.b);
  const Mat2C den = f.c * m + Mat2C::diag(f.d, f.d);
  const Cplx dden = den.det();
  // det(cA + dI) = c^2 det A + cd tr A + d^2 vanishes exactly when -d/c is
  // an eigenvalue.
  const double scale = std::max({1.0, std::norm(f.c) * m.gram_trace(), std::norm(f.d)});
  if (std::abs(dden) <= 1e-14 * scale)
    throw SingularResolvent("mobius_apply: -d/c lies in the spectrum");
  return num * den.inverse();
}

double scaling_factor(const MobiusMap& f, const Mat2C& m) {
  const Eigen::Matrix4d g = detail::shell_g_ckbp(five_data(m));
  const Cplx cd = std::conj(f.c) * f.d;
  Eigen::Vector4d w(2.0 * cd.real(), 2.0 * cd.imag(), std::norm(f.c), std::norm(f.d));
  return w.dot(g * w) / std::norm(f.determinant());
}

Eigen::Matrix4d mobius_projective_rep(const MobiusMap& f, Model model) {
  const Cplx p = f.a * std::conj(f.d), q = f.b * std::conj(f.c);
  const Cplx ab = f.a * std::conj(f.b), cd = f.c * std::conj(f.d);
  const Cplx ac = f.a * std::conj(f.c), bd = f.b * std::conj(f.d);
  // Action on (Re l, Im l, |l|^2, 1): expand (a l + b) conj(c l + d),
  // |a l + b|^2, |c l + d|^2 as linear forms in those coordinates.
  Eigen::Matrix4d r;
  r << (p + q).real(), (q - p).imag(), ac.real(), bd.real(),
      (p + q).imag(), (p - q).real(), ac.imag(), bd.imag(),
      2 * ab.real(), -2 * ab.imag(), std::norm(f.a), std::norm(f.b),
      2 * cd.real(), -2 * cd.imag(), std::norm(f.c), std::norm(f.d);
  r /= std::abs(f.determinant());  // det(r) = |ad - bc|^4 before scaling
  if (model == Model::CKB) {
    const Eigen::Matrix4d t = transport4();
    return t.inverse() * r * t;
  }
  if (model == Model::PH) throw Error("projective representation lives in CKBP/CKB");
  return r;
}

Eigen::Matrix3d mobius_projective_rep2(const MobiusMap& f, Model model) {
  if (!f.is_real())
    throw WrongSpectralClass("mobius_projective_rep2: real-coefficient map required");
  const double a = f.a.real(), b = f.b.real(), c = f.c.real(), d = f.d.real();
  Eigen::Matrix3d r;
  r << a * d + b * c, a * c, b * d,
      2 * a * b, a * a, b * b,
      2 * c * d, c * c, d * d;
  r /= (a * d - b * c);  // det(r) = (ad - bc)^3 before scaling
  if (model == Model::CKB) {
    const Eigen::Matrix3d t = transport2();
    return t.inverse() * r * t;
  }
  if (model == Model::PH) throw Error("projective representation lives in CKBP/CKB");
  return r;
}

}  // namespace shellrange
