#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shellrange/confrange.hpp"
#include "shellrange/errors.hpp"
#include "shellrange/numrange.hpp"
#include "shellrange/shell.hpp"
#include "support.hpp"

using namespace shellrange;
using namespace testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("counter rng is schedule independent and reproducible") {
  const CounterRng a(42), b(42), c(43);
  CHECK(a.word(7, 3) == b.word(7, 3));
  CHECK(a.word(7, 3) != c.word(7, 3));
  // Out-of-order evaluation gives the same stream.
  std::vector<double> fwd, rev;
  for (int i = 0; i < 16; ++i) fwd.push_back(a.uniform(i, 0));
  for (int i = 15; i >= 0; --i) rev.push_back(b.uniform(i, 0));
  for (int i = 0; i < 16; ++i) CHECK(fwd[i] == rev[15 - i]);
  // Gaussian moments are sane.
  double mean = 0, var = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) mean += a.gaussian(i, 0) / n;
  for (int i = 0; i < n; ++i) {
    const double g = a.gaussian(i, 0);
    var += (g - mean) * (g - mean) / n;
  }
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.05);
}

TEST_CASE("sampling clouds") {
  // The zero matrix maps everything to the origin.
  for (const HPoint3& p : sample_shell(Mat2C::zero(), 32, 9).points3) {
    CHECK(p.x == 0.0);
    CHECK(p.y == 0.0);
    CHECK(p.z == 0.0);
  }
  // Top of the band shell approaches the squared norm.
  const Mat2C a = band_rep(1);
  const auto cloud = sample_shell(a, 20000, 0x10);
  double top = 0;
  for (const HPoint3& p : cloud.points3) top = std::max(top, p.z);
  const double want = std::pow(1 + std::sqrt(2.0), 2);
  CHECK(top <= want + 1e-9);
  CHECK(top > want * (1 - 2e-3));
  // Normal matrices: all points on the h-line between the eigenpoints, so
  // the shell quadric vanishes on them.
  const Mat2C n = Mat2C::diag(Cplx(1, 1), Cplx(-1, 0));
  const Quadric4 q = shell_Q(n);
  for (const HPoint3& p : sample_shell(n, 200, 4).points3)
    CHECK(std::abs(q(p)) < 1e-10 * (1 + q.m.norm()));
}

TEST_CASE("standard envelope lies on the boundary quadric") {
  for (const Mat2C& a : {band_rep(1), shear_rep(kPi / 4), loxo_rep(kPi / 3, 1, Sign::Plus),
                         random_of_class(SpectralClass::QuasiElliptic, 0xE5, 3)}) {
    const Quadric3 q = confrange_Q(a);
    const auto pts = envelope_standard(a, default_lambda_grid());
    CHECK(pts.size() >= 2 * default_lambda_grid().size());
    for (const HPoint2& p : pts)
      CHECK(std::abs(q(p)) < 1e-8 * std::max(1.0, q.m.norm()));
  }
  CHECK_THROWS_AS(envelope_standard(Mat2C::diag(1, 2), default_lambda_grid()), Error);
  // The vertical extremes of the band representative at lambda = 0.
  const auto pts = envelope_standard(band_rep(1), {0.0});
  bool top = false, bottom = false;
  for (const HPoint2& p : pts) {
    if (std::abs(p.x) > 1e-12) continue;
    top = top || std::abs(p.z - std::pow(1 + std::sqrt(2.0), 2)) < 1e-9;
    bottom = bottom || std::abs(p.z - std::pow(std::sqrt(2.0) - 1, 2)) < 1e-9;
  }
  CHECK(top);
  CHECK(bottom);
}

TEST_CASE("rotational envelope matches the standard one") {
  for (const Mat2C& a : {band_rep(1), shear_rep(kPi / 4), loxo_rep(kPi / 3, 1, Sign::Plus)}) {
    const Quadric3 q_ckb = confrange_Q(a, Model::CKB);
    const auto pts = envelope_rotational(a, default_omega_grid());
    CHECK(pts.size() > 700);
    for (const HPoint2& p : pts)
      CHECK(std::abs(q_ckb(p)) < 1e-8 * std::max(1.0, q_ckb.m.norm()));
    // Set-level agreement with the standard construction.
    const auto std_pts = envelope_standard(a, default_lambda_grid(2048));
    double worst = 0;
    for (size_t i = 0; i < pts.size(); i += 7) {
      const HPoint2 pc = pts[i];
      double best = 1e300;
      for (const HPoint2& s : std_pts) {
        const HPoint2 sc = convert(s, Model::CKB);
        best = std::min(best, std::hypot(sc.x - pc.x, sc.z - pc.z));
      }
      worst = std::max(worst, best);
    }
    CHECK(worst < 1e-3);
  }
  // The branch function matches a direct norm computation away from the
  // singular angles.
  const Mat2C a = shear_rep(kPi / 4);
  for (double omega : {0.3, 2.0, 5.1}) {
    const double c = std::cos(omega / 2), s = std::sin(omega / 2);
    const Mat2C num = c * a - Mat2C::diag(s, s);
    const Mat2C den = s * a + Mat2C::diag(c, c);
    const Mat2C m = num * den.inverse();
    CHECK(rotational_norm_sq(a, omega) ==
          doctest::Approx(std::pow(norm_conorm(m).first, 2)).epsilon(1e-10));
  }
  // Singular angle: the pole of the rotation hits the spectrum of the
  // nilpotent shear at omega = pi.
  CHECK_THROWS_AS(rotational_norm_sq(nilpotent(), kPi), SingularRotation);
}

TEST_CASE("algebraic envelope equals four times the quadric form") {
  const CounterRng rng(0xA19);
  for (const Mat2C& a : {band_rep(1), shear_rep(kPi / 4), loxo_rep(1.1, 0.7, Sign::Minus),
                         random_gaussian_matrix(0xA20, 1)}) {
    const Quadric3 q = confrange_Q(a);
    for (int i = 0; i < 50; ++i) {
      const double x = 4 * rng.uniform(i, 0) - 2;
      const double z = x * x + 4 * rng.uniform(i, 1);
      const HPoint2 p(Model::CKBP, x, z);
      CHECK(envelope_algebraic(a, p) == doctest::Approx(4.0 * q(p)).epsilon(1e-9));
    }
    // Boundary points: zero; interior: negative.
    for (const HPoint2& b : envelope_standard(
             a.is_normal() ? band_rep(1) : a, default_lambda_grid(64)))
      CHECK(std::abs(envelope_algebraic(a.is_normal() ? band_rep(1) : a, b)) <
            1e-7 * std::max(1.0, q.m.norm()));
  }
  const Mat2C b = band_rep(1);
  CHECK(envelope_algebraic(b, random_interior_cr_point(b, 0xF, 0)) < 0);
}

TEST_CASE("projection calculus") {
  // Identity 4x4, axis 4.
  const Eigen::MatrixXd id = Eigen::Matrix4d::Identity();
  CHECK((project_quadratic(id, 3, ProjectionMethod::Eliminate) -
         Eigen::Matrix3d::Identity())
            .norm() < 1e-14);
  CHECK((project_quadratic(id, 3, ProjectionMethod::InverseRestrictInverse) -
         Eigen::Matrix3d::Identity())
            .norm() < 1e-14);
  CHECK((project_quadratic(id, 3, ProjectionMethod::Discriminant) +
         4.0 * Eigen::Matrix3d::Identity())
            .norm() < 1e-14);

  // Shell of the band matrix projected along y is proportional to the
  // numerical range quadric; along the second coordinate it gives the
  // conformal range with the documented factor.
  const Mat2C a = band_rep(1);
  const Eigen::MatrixXd py = project_quadratic(shell_Q(a).m, 2, ProjectionMethod::Eliminate);
  CHECK((py - numrange_Q(a).m).norm() < 1e-12);
  const double kappa = a.gram_trace() - 2 * a.det().real();
  const Eigen::MatrixXd px = project_quadratic(shell_Q(a).m, 1, ProjectionMethod::Eliminate);
  CHECK((kappa * px - confrange_Q(a).m).norm() < 1e-10);

  // Determinant law and pairwise agreement on random symmetric matrices.
  const CounterRng rng(0xBB);
  for (int i = 0; i < 1000; ++i) {
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) m(r, c) = m(c, r) = rng.gaussian(i, 4 * r + c);
    if (std::abs(m(3, 3)) < 1e-6) continue;
    const Eigen::MatrixXd e = project_quadratic(m, 3, ProjectionMethod::Eliminate);
    const Eigen::MatrixXd d = project_quadratic(m, 3, ProjectionMethod::Discriminant);
    CHECK((d + 4 * m(3, 3) * e).norm() < 1e-9 * (1 + e.norm() * std::abs(m(3, 3))));
    CHECK(e.determinant() * m(3, 3) ==
          doctest::Approx(m.determinant()).epsilon(1e-9));
    if (std::abs(m.determinant()) > 1e-4) {
      const Eigen::MatrixXd r3 =
          project_quadratic(m, 3, ProjectionMethod::InverseRestrictInverse);
      CHECK((r3 - e).norm() < 1e-8 * (1 + e.norm()));
    }
  }
  Eigen::Matrix4d z = Eigen::Matrix4d::Identity();
  z(3, 3) = 0;
  CHECK_THROWS_AS(project_quadratic(z, 3, ProjectionMethod::Eliminate), SingularPivot);
}

TEST_CASE("cloud points approach the parametrized boundary") {
  const Mat2C a = loxo_rep(kPi / 3, 1, Sign::Plus);
  const auto cloud = sample_cr(a, 200000, 0xCAFE);
  const auto boundary = envelope_standard(a, default_lambda_grid(512));
  double worst = 0;
  for (size_t i = 0; i < boundary.size(); i += 5) {
    const HPoint2 b = convert(boundary[i], Model::CKB);
    double best = 1e300;
    for (size_t j = 0; j < cloud.points2.size(); j += 7) {
      const HPoint2 p = convert(cloud.points2[j], Model::CKB);
      best = std::min(best, std::hypot(b.x - p.x, b.z - p.z));
    }
    worst = std::max(worst, best);
  }
  CHECK(worst < 0.02);
}
