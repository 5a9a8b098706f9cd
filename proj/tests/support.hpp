#pragma once

#include <cmath>
#include <vector>

#include "shellrange/confrange.hpp"
#include "shellrange/invariants.hpp"
#include "shellrange/mat2.hpp"
#include "shellrange/oracle.hpp"
#include "shellrange/verify.hpp"

namespace sr = shellrange;

namespace testsupport {

// Canonical representatives up to (real) Moebius equivalence and unitary
// conjugation. The band family covers the non-parabolic cases, the shear
// family the one-real-eigenvalue cases.
inline sr::Mat2C band_rep(double t) {  // [[1, 2t], [0, -1]]
  return sr::Mat2C(1, 2 * t, 0, -1);
}

enum class Sign { Plus, Minus };

// [[e^{ia}, 2t], [0, -e^{-ia}]] (Plus) or [[e^{ia}, 2t], [0, -e^{ia}]] (Minus).
inline sr::Mat2C loxo_rep(double alpha, double t, Sign s) {
  const sr::Cplx top = std::polar(1.0, alpha);
  const sr::Cplx bottom = s == Sign::Plus ? -std::conj(top) : -top;
  return sr::Mat2C(top, 2 * t, 0, bottom);
}

// [[0, cos b], [0, i sin b]].
inline sr::Mat2C shear_rep(double beta) {
  return sr::Mat2C(0, std::cos(beta), 0, sr::Cplx(0, std::sin(beta)));
}

inline sr::Mat2C nilpotent() { return sr::Mat2C(0, 1, 0, 0); }

// Random matrix of a prescribed spectral class, built from a triangular
// form conjugated by a random unitary; parameters stay away from the class
// boundaries.
inline sr::Mat2C random_of_class(sr::SpectralClass cls, std::uint64_t seed,
                                 std::uint64_t index, bool force_nonnormal = true) {
  const sr::CounterRng rng(seed);
  auto u = [&](int k) { return rng.uniform(index, 50 + k); };
  const double t = force_nonnormal ? 0.3 + 1.2 * u(0) : 0.0;
  const double re1 = -1.5 + 3.0 * u(1), re2 = -1.5 + 3.0 * u(2);
  const double im1 = 0.25 + 1.25 * u(3), im2 = 0.25 + 1.25 * u(4);
  sr::Cplx l1, l2;
  switch (cls) {
    case sr::SpectralClass::RealElliptic:
      l1 = sr::Cplx(re1, im1);
      l2 = std::conj(l1);
      break;
    case sr::SpectralClass::RealParabolic:
      l1 = l2 = sr::Cplx(re1, 0);
      break;
    case sr::SpectralClass::RealHyperbolic:
      l1 = sr::Cplx(re1, 0);
      l2 = sr::Cplx(re1 + 0.5 + u(5), 0);
      break;
    case sr::SpectralClass::NonRealParabolic:
      l1 = l2 = sr::Cplx(re1, im1);
      break;
    case sr::SpectralClass::SemiReal:
      l1 = sr::Cplx(re1, 0);
      l2 = sr::Cplx(re2, im2);
      break;
    case sr::SpectralClass::QuasiElliptic:
      l1 = sr::Cplx(re1, im1);
      l2 = sr::Cplx(re2 + 0.4, -im2);
      break;
    case sr::SpectralClass::QuasiHyperbolic:
      l1 = sr::Cplx(re1, im1);
      l2 = sr::Cplx(re2 + 0.4, im1 + 0.4 + im2);
      break;
  }
  const sr::Mat2C tri = sr::Mat2C::triangular(l1, l2, t);
  const sr::Mat2C q = sr::random_unitary(seed ^ 0xC1A5, index);
  return q.adjoint() * tri * q;
}

// Random interior point of the conformal range of A (in CKBP), found by
// rejection from the sampling map.
inline sr::HPoint2 random_interior_cr_point(const sr::Mat2C& a, std::uint64_t seed,
                                            std::uint64_t index) {
  const sr::Quadric3 q = sr::confrange_Q(a);
  const double margin = 1e-3 * std::max(1.0, q.m.norm());
  for (std::uint64_t k = 0; k < 64; ++k) {
    const auto cloud = sr::sample_cr(a, 8, seed + 977 * (64 * index + k));
    for (sr::HPoint2 p : cloud.points2) {
      // Pull toward the interior a little to stay clear of the boundary.
      sr::HPoint2 mixed(sr::Model::CKBP, p.x, p.z + 1e-3 * (1.0 + std::abs(p.z)));
      if (q(mixed) < -margin && mixed.interior(1e-9)) return mixed;
    }
  }
  // Fall back to the image of the first basis vector, nudged inward.
  const auto cloud = sr::sample_cr(a, 1, seed);
  const sr::HPoint2 p = cloud.points2.front();
  return sr::HPoint2(sr::Model::CKBP, p.x, p.z + 0.05 * (1.0 + std::abs(p.z)));
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testsupport
