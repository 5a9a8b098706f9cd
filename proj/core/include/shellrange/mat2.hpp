#pragma once

#include <string>
#include <string_view>

#include "shellrange/complex_ops.hpp"

namespace shellrange {

/// 2x2 complex matrix, the sole analysis subject. Entries are validated
/// finite on construction; all operations are pure.
struct Mat2C {
  Cplx a11, a12, a21, a22;

  Mat2C() : a11(0), a12(0), a21(0), a22(0) {}
  Mat2C(Cplx m11, Cplx m12, Cplx m21, Cplx m22);

  static Mat2C zero() { return Mat2C(); }
  static Mat2C identity() { return Mat2C(1, 0, 0, 1); }
  static Mat2C diag(Cplx l1, Cplx l2) { return Mat2C(l1, 0, 0, l2); }
  /// Upper triangular [[l1, t],[0, l2]].
  static Mat2C triangular(Cplx l1, Cplx l2, double t) { return Mat2C(l1, t, 0, l2); }

  Cplx trace() const { return a11 + a22; }
  Cplx det() const { return a11 * a22 - a12 * a21; }
  /// Conjugate transpose.
  Mat2C adjoint() const;
  /// Classical adjugate: A * adj(A) = det(A) * I.
  Mat2C adjugate() const { return Mat2C(a22, -a12, -a21, a11); }
  /// tr(A*A) = squared Frobenius norm.
  double gram_trace() const;
  double frobenius_norm() const;
  Mat2C inverse() const;  // throws SingularResolvent on det == 0
  bool is_normal(double tol = 1e-12) const;

  friend Mat2C operator+(const Mat2C& a, const Mat2C& b) {
    return Mat2C(a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22);
  }
  friend Mat2C operator-(const Mat2C& a, const Mat2C& b) {
    return Mat2C(a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22);
  }
  friend Mat2C operator*(const Mat2C& a, const Mat2C& b) {
    return Mat2C(a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                 a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22);
  }
  friend Mat2C operator*(Cplx s, const Mat2C& a) {
    return Mat2C(s * a.a11, s * a.a12, s * a.a21, s * a.a22);
  }
};

/// Parses the matrix literal "[a11,a12;a21,a22]" with complex entries.
Mat2C parse_mat2(std::string_view text);

std::string format_mat2(const Mat2C& a);

}  // namespace shellrange
