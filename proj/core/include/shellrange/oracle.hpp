#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "shellrange/quadrics.hpp"

namespace shellrange {

/// Counter-based generator: draw k of point index i depends only on
/// (seed, i, k), so parallel fills produce identical streams. The word
/// function is splitmix64 keyed by seed and counter.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t word(std::uint64_t index, std::uint64_t draw) const;
  /// Uniform in [0, 1).
  double uniform(std::uint64_t index, std::uint64_t draw) const;
  /// Standard normal, Box-Muller on draws (2k, 2k+1).
  double gaussian(std::uint64_t index, std::uint64_t draw) const;
  /// Standard complex Gaussian (variance 1 per real part pair).
  Cplx cgaussian(std::uint64_t index, std::uint64_t draw) const;

 private:
  std::uint64_t seed_;
};

/// Random unit vector statistics of A: points of the shell (3d) and the
/// ranges (2d projections).
struct SampleCloud {
  std::vector<HPoint3> points3;
  std::vector<HPoint2> points2;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  Model model = Model::CKBP;
};

/// Shell points (Re<Ax,x>, Im<Ax,x>, |Ax|^2) for n uniformly random unit x.
SampleCloud sample_shell(const Mat2C& a, std::size_t n, std::uint64_t seed);
/// Conformal-range points (Re<Ax,x>, |Ax|^2): the y-drop of the shell.
SampleCloud sample_cr(const Mat2C& a, std::size_t n, std::uint64_t seed);
/// Numerical-range points <Ax,x> as complex numbers.
std::vector<Cplx> sample_numrange(const Mat2C& a, std::size_t n, std::uint64_t seed);

/// Default boundary grids: tan-warped lambda values on [-10, 10] plus the
/// two infinite-limit points, and a uniform angle grid.
std::vector<double> default_lambda_grid(std::size_t n = 720);
std::vector<double> default_omega_grid(std::size_t n = 720);

/// Enveloping construction from the norm/co-norm branches of A - l I; the
/// returned CKBP points trace the conformal-range boundary. The two
/// explicit l -> +-inf limit points are appended.
std::vector<HPoint2> envelope_standard(const Mat2C& a, const std::vector<double>& lambda_grid);

/// Rotational enveloping construction in the CKB model; grid angles whose
/// Moebius rotation hits the spectrum are skipped.
std::vector<HPoint2> envelope_rotational(const Mat2C& a, const std::vector<double>& omega_grid);

/// Norm of the rotated Cayley-type transform, straight from the reduced
/// five data (the rotational branch function).
double rotational_norm_sq(const Mat2C& a, double omega);

/// Discriminant in l of F(l, l^2 - 2xl + z); it equals 4 times the
/// conformal-range form at p, and vanishes exactly on the boundary.
double envelope_algebraic(const Mat2C& a, const HPoint2& p);

enum class ProjectionMethod { InverseRestrictInverse, Eliminate, Discriminant };

/// Projects a symmetric quadratic form onto the complement of `axis`
/// (0-based). Eliminate and InverseRestrictInverse give the Schur
/// complement A - b b^t / c; Discriminant gives -4c times that.
Eigen::MatrixXd project_quadratic(const Eigen::MatrixXd& m, int axis, ProjectionMethod method);

}  // namespace shellrange
