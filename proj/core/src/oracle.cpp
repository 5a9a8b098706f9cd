#include "shellrange/oracle.hpp"

#include <cmath>
#include <numbers>

#include "shellrange/errors.hpp"
#include "shellrange/invariants.hpp"

namespace shellrange {

std::uint64_t CounterRng::word(std::uint64_t index, std::uint64_t draw) const {
  // splitmix64 on a linearly combined key.
  std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (2 * index + 1) +
                    0xbf58476d1ce4e5b9ULL * (draw + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t index, std::uint64_t draw) const {
  return static_cast<double>(word(index, draw) >> 11) * 0x1.0p-53;
}

double CounterRng::gaussian(std::uint64_t index, std::uint64_t draw) const {
  const double u1 = uniform(index, 2 * draw);
  const double u2 = uniform(index, 2 * draw + 1);
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

Cplx CounterRng::cgaussian(std::uint64_t index, std::uint64_t draw) const {
  const double u1 = uniform(index, 2 * draw);
  const double u2 = uniform(index, 2 * draw + 1);
  const double r = std::sqrt(-std::log(1.0 - u1));
  return Cplx(r * std::cos(2.0 * std::numbers::pi * u2),
              r * std::sin(2.0 * std::numbers::pi * u2));
}

namespace {

struct UnitPair {
  Cplx z1, z2;
};

UnitPair unit_vector(const CounterRng& rng, std::uint64_t i) {
  Cplx z1 = rng.cgaussian(i, 0);
  Cplx z2 = rng.cgaussian(i, 1);
  double n = std::sqrt(std::norm(z1) + std::norm(z2));
  if (n == 0.0) {
    z1 = 1.0;
    n = 1.0;
  }
  return {z1 / n, z2 / n};
}

}  // namespace

SampleCloud sample_shell(const Mat2C& a, std::size_t n, std::uint64_t seed) {
  const CounterRng rng(seed);
  SampleCloud cloud;
  cloud.seed = seed;
  cloud.count = n;
  cloud.points3.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [z1, z2] = unit_vector(rng, i);
    const Cplx w1 = a.a11 * z1 + a.a12 * z2;
    const Cplx w2 = a.a21 * z1 + a.a22 * z2;
    const Cplx form = w1 * std::conj(z1) + w2 * std::conj(z2);
    const double zz = std::norm(w1) + std::norm(w2);
    cloud.points3.emplace_back(Model::CKBP, form.real(), form.imag(), zz);
  }
  return cloud;
}

SampleCloud sample_cr(const Mat2C& a, std::size_t n, std::uint64_t seed) {
  SampleCloud shell = sample_shell(a, n, seed);
  SampleCloud cloud;
  cloud.seed = seed;
  cloud.count = n;
  cloud.points2.reserve(n);
  for (const HPoint3& p : shell.points3)
    cloud.points2.emplace_back(Model::CKBP, p.x, p.z);
  return cloud;
}

std::vector<Cplx> sample_numrange(const Mat2C& a, std::size_t n, std::uint64_t seed) {
  SampleCloud shell = sample_shell(a, n, seed);
  std::vector<Cplx> out;
  out.reserve(n);
  for (const HPoint3& p : shell.points3) out.emplace_back(p.x, p.y);
  return out;
}

std::vector<double> default_lambda_grid(std::size_t n) {
  // tan-warped so the asymptotic ends are as well covered as the middle.
  std::vector<double> grid;
  grid.reserve(n);
  const double u0 = std::atan(10.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = -u0 + 2.0 * u0 * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    grid.push_back(std::tan(u));
  }
  return grid;
}

std::vector<double> default_omega_grid(std::size_t n) {
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    grid.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  return grid;
}

namespace {

Eigen::Matrix2d cr_core(const ReducedFiveData& r) {
  Eigen::Matrix2d core;
  core << r.z * r.z - 4 * r.y, 2 * r.x - r.v * r.z, 2 * r.x - r.v * r.z,
      r.v * r.v - r.w + r.z;
  return core;
}

}  // namespace

std::vector<HPoint2> envelope_standard(const Mat2C& a, const std::vector<double>& grid) {
  if (a.is_normal()) throw Error("envelope_standard: non-normal matrix required");
  const ReducedFiveData r = reduced_five_data(a);
  const Eigen::Matrix2d core = cr_core(r);
  std::vector<HPoint2> out;
  out.reserve(2 * grid.size() + 2);
  auto emit = [&](const Eigen::Vector2d& dir) {
    const double q = dir.dot(core * dir);
    if (q <= 0) return;
    const Eigen::Vector2d rot(-(core * dir)(1), (core * dir)(0));
    const Eigen::Vector2d base(r.v, r.z);
    for (double sgn : {1.0, -1.0}) {
      const Eigen::Vector2d p = 0.5 * (base + sgn * rot / std::sqrt(q));
      out.emplace_back(Model::CKBP, p(0), p(1));
    }
  };
  for (double l : grid) emit(Eigen::Vector2d(1.0, 2.0 * l));
  emit(Eigen::Vector2d(0.0, 1.0));   // l -> +inf limit
  emit(Eigen::Vector2d(0.0, -1.0));  // l -> -inf limit
  return out;
}

double rotational_norm_sq(const Mat2C& a, double omega) {
  const double c = std::cos(omega / 2), s = std::sin(omega / 2);
  const Mat2C num = c * a - Mat2C::diag(s, s);
  const Mat2C den = s * a + Mat2C::diag(c, c);
  const double dd = std::abs(den.det());
  if (dd <= 1e-12 * std::max(1.0, a.gram_trace()))
    throw SingularRotation("rotational branch: the rotation pole hits the spectrum");
  const Mat2C m = num * den.inverse();
  return norm_conorm(m).first * norm_conorm(m).first;
}

std::vector<HPoint2> envelope_rotational(const Mat2C& a, const std::vector<double>& grid) {
  if (a.is_normal()) throw Error("envelope_rotational: non-normal matrix required");
  const ReducedFiveData rd = reduced_five_data(a);
  const double v = rd.v, w = rd.w, x = rd.x, y = rd.y, z = rd.z;
  Eigen::Matrix2d s;
  s << z * z - 4 * y, -2 * y * v - v * z + x * z + 2 * x,
      -2 * y * v - v * z + x * z + 2 * x,
      v * v + 2 * v * x - w * y - w * z + x * x + y * z + z * z - w + z;
  const Eigen::Vector2d base(v + x, y - 1.0);
  const double denom = 1.0 + y + z;

  std::vector<HPoint2> out;
  out.reserve(2 * grid.size());
  for (double omega : grid) {
    const Eigen::Vector2d dir(std::cos(omega), std::sin(omega));
    const double q = dir.dot(s * dir);
    if (q <= 1e-12 * (1.0 + s.norm())) continue;  // singular rotation angle
    const Eigen::Vector2d rot(-(s * dir)(1), (s * dir)(0));
    const Eigen::Vector2d p = (base + rot / std::sqrt(q)) / denom;
    if (p.squaredNorm() <= 1.0 + 1e-9) out.emplace_back(Model::CKB, p(0), p(1));
  }
  return out;
}

double envelope_algebraic(const Mat2C& a, const HPoint2& p) {
  const HPoint2 q = convert(p, Model::CKBP);
  if (q.infinity) throw Error("envelope_algebraic: finite point required");
  const ReducedFiveData r = reduced_five_data(a);
  const double x = q.x, z = q.z;
  // F(l, l^2 - 2xl + z) as a quadratic in l.
  const double qa = 4 * x * x - 4 * r.v * x + r.w - r.z;
  const double qb = 4 * x * z + 2 * r.z * x + 2 * r.v * z - 2 * r.x;
  const double qc = z * z - r.z * z + r.y;
  return qb * qb - 4 * qa * qc;
}

Eigen::MatrixXd project_quadratic(const Eigen::MatrixXd& m, int axis, ProjectionMethod method) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n || axis < 0 || axis >= n) throw InvalidInput("project_quadratic: bad input");

  // Permute `axis` last.
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i != axis) keep.push_back(i);
  Eigen::MatrixXd a(n - 1, n - 1);
  Eigen::VectorXd b(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) a(i, j) = m(keep[i], keep[j]);
    b(i) = m(keep[i], axis);
  }
  const double c = m(axis, axis);

  switch (method) {
    case ProjectionMethod::Discriminant:
      return -4.0 * c * a + 4.0 * b * b.transpose();
    case ProjectionMethod::Eliminate:
      if (c == 0.0) throw SingularPivot("project_quadratic: zero pivot");
      return a - b * b.transpose() / c;
    case ProjectionMethod::InverseRestrictInverse: {
      if (c == 0.0) throw SingularPivot("project_quadratic: zero pivot");
      const Eigen::MatrixXd inv = m.inverse();
      if (!inv.allFinite()) throw SingularPivot("project_quadratic: matrix not invertible");
      Eigen::MatrixXd sub(n - 1, n - 1);
      for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) sub(i, j) = inv(keep[i], keep[j]);
      return sub.inverse();
    }
  }
  throw Error("project_quadratic: unreachable");
}

}  // namespace shellrange
