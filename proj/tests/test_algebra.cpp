#include <doctest.h>

#include <cmath>

#include "shellrange/errors.hpp"
#include "shellrange/invariants.hpp"
#include "shellrange/mobius.hpp"
#include "support.hpp"

using namespace shellrange;
using namespace testsupport;

TEST_CASE("principal square root follows the half-sided branch") {
  CHECK(principal_sqrt(Cplx(1, 0)) == Cplx(1, 0));
  // On the cut itself the half-sided sign picks the upper branch.
  CHECK(principal_sqrt(Cplx(-1, 0)) == Cplx(0, 1));
  // Just below the cut the lower branch applies: sqrt(-1 - ei) ~ e/2 - i.
  const Cplx z = principal_sqrt(Cplx(-1, -1e-6));
  CHECK(z.imag() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(z.real() == doctest::Approx(5e-7).epsilon(1e-3));
  // Consistency with the square.
  for (double re : {-2.0, -0.3, 0.0, 1.7})
    for (double im : {-1.0, 0.0, 0.5}) {
      const Cplx w = principal_sqrt(Cplx(re, im));
      CHECK(std::abs(w * w - Cplx(re, im)) < 1e-12 * (1 + std::abs(Cplx(re, im))));
    }
}

TEST_CASE("complex and matrix literals parse") {
  CHECK(parse_complex("1.5+2i") == Cplx(1.5, 2));
  CHECK(parse_complex("-3i") == Cplx(0, -3));
  CHECK(parse_complex("2") == Cplx(2, 0));
  CHECK(parse_complex("i") == Cplx(0, 1));
  CHECK(parse_complex("1e-3-2.5e2i") == Cplx(1e-3, -250));
  CHECK_THROWS_AS(parse_complex("foo"), InvalidInput);
  CHECK_THROWS_AS(parse_complex("1+2"), InvalidInput);

  const Mat2C a = parse_mat2("[1, 2; 0, -1]");
  CHECK(a.a11 == Cplx(1, 0));
  CHECK(a.a12 == Cplx(2, 0));
  CHECK(a.a21 == Cplx(0, 0));
  CHECK(a.a22 == Cplx(-1, 0));
  CHECK(parse_mat2(format_mat2(a)).a12 == a.a12);
  CHECK_THROWS_AS(parse_mat2("[1,2;3]"), InvalidInput);
}

TEST_CASE("five data of the reference matrices") {
  auto arr = [](const FiveData& f) { return f.as_array(); };
  CHECK(arr(five_data(Mat2C::zero())) == std::array<double, 5>{0, 0, 0, 0, 0});
  CHECK(arr(five_data(band_rep(1))) == std::array<double, 5>{0, 0, -1, 0, 6});
  CHECK(arr(five_data(nilpotent())) == std::array<double, 5>{0, 0, 0, 0, 1});
}

TEST_CASE("reduced five data of the reference matrices") {
  auto arr = [](const ReducedFiveData& r) { return r.as_array(); };
  CHECK(arr(reduced_five_data(Mat2C::zero())) == std::array<double, 5>{0, 0, 0, 0, 0});
  CHECK(arr(reduced_five_data(band_rep(1))) == std::array<double, 5>{0, -2, 0, 1, 6});
  const auto r = reduced_five_data(shear_rep(std::numbers::pi / 3)).as_array();
  CHECK(r[0] == doctest::Approx(0.0));
  CHECK(r[1] == doctest::Approx(0.75));
  CHECK(r[2] == doctest::Approx(0.0));
  CHECK(r[3] == doctest::Approx(0.0));
  CHECK(r[4] == doctest::Approx(1.0));
}

TEST_CASE("invariants of the canonical families") {
  for (double t : {0.0, 0.5, 1.0, 2.0}) {
    const InvariantSet s = invariants(band_rep(t));
    CHECK(s.u == doctest::Approx(1 + 2 * t * t).epsilon(1e-12));
    CHECK(s.abs_d == doctest::Approx(1.0).epsilon(1e-12));
  }
  {
    const InvariantSet s = invariants(nilpotent());
    CHECK(s.u == doctest::Approx(0.5));
    CHECK(s.abs_d == doctest::Approx(0.0));
  }
  for (double alpha : {0.2, 1.0})
    for (double t : {0.0, 0.7}) {
      const InvariantSet plus = invariants(loxo_rep(alpha, t, Sign::Plus));
      CHECK(plus.e == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(plus.abs_d ==
            doctest::Approx(std::cos(alpha) * std::cos(alpha)).epsilon(1e-12));
      CHECK(plus.u == doctest::Approx(2 * t * t + std::cos(alpha) * std::cos(alpha)));
      const InvariantSet minus = invariants(loxo_rep(alpha, t, Sign::Minus));
      CHECK(minus.e ==
            doctest::Approx(std::cos(alpha) * std::cos(alpha)).epsilon(1e-12));
      CHECK(minus.abs_d == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(minus.u == doctest::Approx(2 * t * t + 1));
    }
  for (double beta : {0.0, 0.9, std::numbers::pi / 2}) {
    const InvariantSet s = invariants(shear_rep(beta));
    const double c2 = std::cos(beta) * std::cos(beta);
    CHECK(s.u == doctest::Approx((1 + c2) / 4).epsilon(1e-12));
    CHECK(s.abs_d == doctest::Approx((1 - c2) / 4).epsilon(1e-12));
    CHECK(s.e == doctest::Approx((1 - c2) / 4).epsilon(1e-12));
  }
  // diag(i, -i) is real-elliptic with |D| = 1, E = 0, H = -1.
  const InvariantSet s = invariants(Mat2C::diag(Cplx(0, 1), Cplx(0, -1)));
  CHECK(s.abs_d == doctest::Approx(1.0));
  CHECK(s.e == doctest::Approx(0.0));
  CHECK(s.h == doctest::Approx(-1.0));
  CHECK(s.cls == SpectralClass::RealElliptic);
}

TEST_CASE("spectral classes of the canonical families") {
  CHECK(invariants(Mat2C::zero()).cls == SpectralClass::RealParabolic);
  CHECK(invariants(nilpotent()).cls == SpectralClass::RealParabolic);
  CHECK(invariants(shear_rep(0.7)).cls == SpectralClass::SemiReal);
  CHECK(invariants(shear_rep(std::numbers::pi / 2)).cls == SpectralClass::SemiReal);
  CHECK(invariants(band_rep(0.5)).cls == SpectralClass::RealHyperbolic);
  CHECK(invariants(loxo_rep(0.8, 0.5, Sign::Minus)).cls == SpectralClass::QuasiElliptic);
  CHECK(invariants(loxo_rep(0.8, 0.5, Sign::Plus)).cls == SpectralClass::QuasiHyperbolic);
  CHECK(invariants(loxo_rep(std::numbers::pi / 2, 0.5, Sign::Minus)).cls ==
        SpectralClass::RealElliptic);
  CHECK(invariants(loxo_rep(std::numbers::pi / 2, 0.5, Sign::Plus)).cls ==
        SpectralClass::NonRealParabolic);
}

TEST_CASE("eigenvalue branch order is deterministic") {
  const auto [a1, a2] = eigenvalues(Mat2C::diag(3, 5));
  CHECK(a1 == Cplx(5, 0));
  CHECK(a2 == Cplx(3, 0));
  const auto [b1, b2] = eigenvalues(band_rep(0.0));
  CHECK(b1 == Cplx(1, 0));
  CHECK(b2 == Cplx(-1, 0));
  const auto [c1, c2] = eigenvalues(shear_rep(0.9));
  CHECK(std::abs(c1 - Cplx(0, std::sin(0.9))) < 1e-15);
  CHECK(std::abs(c2) < 1e-15);
}

TEST_CASE("canonical triangular form") {
  {
    const auto [form, q] = canonical_triangular(Mat2C::diag(Cplx(1, 0), Cplx(0, 1)));
    CHECK(form.t == doctest::Approx(0.0));
    (void)q;
  }
  {
    const auto [form, q] = canonical_triangular(nilpotent());
    CHECK(form.t == doctest::Approx(1.0));
    CHECK(std::abs(form.lam1) < 1e-12);
    (void)q;
  }
  {
    const auto [form, q] = canonical_triangular(band_rep(1));
    CHECK(form.t == doctest::Approx(2.0));
    (void)q;
  }
  // t = sqrt(2(U - |D|)) and the witness conjugates A to the form, fuzzed.
  for (int i = 0; i < 50; ++i) {
    const Mat2C a = random_gaussian_matrix(0xA11CE, i);
    const InvariantSet s = invariants(a);
    const auto [form, q] = canonical_triangular(a);
    CHECK(form.t ==
          doctest::Approx(std::sqrt(2 * std::max(0.0, s.u - s.abs_d))).epsilon(1e-7));
    const Mat2C tri = q.adjoint() * a * q;
    CHECK(std::abs(tri.a21) < 1e-10);
    CHECK(std::abs(tri.a12 - form.t) < 1e-10);
    CHECK((q.adjoint() * q - Mat2C::identity()).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("norm and co-norm closed forms") {
  for (double alpha : {0.0, 0.6})
    for (double t : {0.0, 0.4, 1.3}) {
      const auto [n, c] = norm_conorm(loxo_rep(alpha, t, Sign::Plus));
      CHECK(n == doctest::Approx(t + std::sqrt(1 + t * t)).epsilon(1e-12));
      (void)c;
    }
  for (double beta : {0.3, 1.1}) {
    // Cayley transform (I - S)(I + S)^{-1}.
    const Mat2C s = shear_rep(beta);
    const Mat2C cay =
        (Mat2C::identity() - s) * (Mat2C::identity() + s).inverse();
    const auto [n, c] = norm_conorm(cay);
    const double want =
        std::sqrt((std::sqrt(2.0) + std::cos(beta)) / (std::sqrt(2.0) - std::cos(beta)));
    CHECK(n == doctest::Approx(want).epsilon(1e-12));
    (void)c;
  }
  const auto [n, c] = norm_conorm(Mat2C::identity());
  CHECK(n == doctest::Approx(1.0));
  CHECK(c == doctest::Approx(1.0));
}

TEST_CASE("moebius maps act on matrices") {
  const Mat2C a = band_rep(1);
  // Identity.
  const Mat2C same = mobius_apply(MobiusMap::identity(), a);
  CHECK((same - a).frobenius_norm() < 1e-14);
  // Shifts move eigenvalues and leave U, |D| alone.
  const MobiusMap shift(1, Cplx(0.3, -0.2), 0, 1);
  const Mat2C b = mobius_apply(shift, a);
  CHECK(invariants(b).u == doctest::Approx(invariants(a).u));
  CHECK(invariants(b).abs_d == doctest::Approx(invariants(a).abs_d));
  // Inversion preserves U : |D|.
  const MobiusMap inv_map(0, 1, 1, 0);
  const Mat2C c = mobius_apply(inv_map, a);
  CHECK(invariants(c).u / invariants(c).abs_d == doctest::Approx(3.0).epsilon(1e-12));
  // A pole on the spectrum is rejected.
  CHECK_THROWS_AS(mobius_apply(MobiusMap(1, 0, 1, -1), a), SingularResolvent);
  CHECK_THROWS_AS(MobiusMap(1, 2, 2, 4), InvalidInput);
}

TEST_CASE("scaling factor values") {
  const Mat2C a = random_gaussian_matrix(0xFACE, 3);
  CHECK(scaling_factor(MobiusMap::identity(), a) == doctest::Approx(1.0));
  const double want = std::norm(a.det());
  CHECK(scaling_factor(MobiusMap(0, 1, 1, 0), a) == doctest::Approx(want).epsilon(1e-12));
  // U_{1/A} * C = U_A.
  const Mat2C inv = mobius_apply(MobiusMap(0, 1, 1, 0), a);
  CHECK(invariants(inv).u * scaling_factor(MobiusMap(0, 1, 1, 0), a) ==
        doctest::Approx(invariants(a).u).epsilon(1e-10));
  const auto [l1, l2] = eigenvalues(a);
  (void)l2;
  CHECK(std::abs(scaling_factor(MobiusMap(1, 0, 1, -l1), a)) < 1e-10);
}

TEST_CASE("U >= |D| with equality exactly for normal matrices") {
  for (int i = 0; i < 200; ++i) {
    const Mat2C a = random_gaussian_matrix(0xBEE, i);
    const InvariantSet s = invariants(a);
    CHECK(s.u >= s.abs_d - 1e-12 * std::max(1.0, s.u));
    const Mat2C comm = a.adjoint() * a - a * a.adjoint();
    const Mat2C cc = comm.adjoint() * comm;
    CHECK((cc.a11 + cc.a22).real() ==
          doctest::Approx(8 * (s.u * s.u - s.abs_d * s.abs_d)).epsilon(1e-10));
  }
  const Mat2C n = Mat2C::diag(Cplx(1, 2), Cplx(-3, 1));
  CHECK(invariants(n).u == doctest::Approx(invariants(n).abs_d));
}
