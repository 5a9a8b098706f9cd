#include "shellrange/confrange.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "shellrange/errors.hpp"
#include "shellrange/shell.hpp"

namespace shellrange {

std::string to_string(CRKind k) {
  switch (k) {
    case CRKind::AsymptoticPoint: return "asymptotic-point";
    case CRKind::HPointCase: return "h-point";
    case CRKind::HSegment: return "h-segment";
    case CRKind::HLineDouble: return "h-line";
    case CRKind::HCircleDisk: return "h-circle-disk";
    case CRKind::HEllipseDisk: return "h-ellipse-disk";
    case CRKind::HalfLine: return "h-half-line";
    case CRKind::EllipticParabolaDisk: return "h-elliptic-parabola-disk";
    case CRKind::DistanceBand: return "distance-band";
    case CRKind::Horodisk: return "horodisk";
  }
  return "?";
}

Quadric3 confrange_Q(const Mat2C& a, Model model) {
  Quadric3 q;
  q.model = Model::CKBP;
  q.role = Role3::CR;
  q.m = detail::cr_q_ckbp(reduced_five_data(a));
  q.degenerate = a.is_normal();
  return to_model(q, model);
}

Quadric3 confrange_G(const Mat2C& a, Model model) {
  Quadric3 g;
  g.model = Model::CKBP;
  g.role = Role3::CRDual;
  g.m = detail::cr_g_ckbp(reduced_five_data(a));
  g.degenerate = a.is_normal();
  return to_model(g, model);
}

std::pair<std::vector<double>, std::vector<double>> cr_eigen_ratios(const Mat2C& a) {
  const Eigen::Matrix3d g = detail::cr_g_ckbp(reduced_five_data(a));
  const Eigen::Matrix3d q = detail::cr_q_ckbp(reduced_five_data(a));
  const Eigen::Matrix3d q0 = base_q3(Model::CKBP);
  return {real_eigenvalues(g * q0), real_eigenvalues(q0.inverse() * q)};
}

CRInvariants cr_invariants(const Mat2C& a) {
  const ReducedFiveData r = reduced_five_data(a);
  CRInvariants inv;
  inv.u1 = 3 * r.z - r.w;
  inv.u2 = 3 * r.z * r.z - 2 * r.w * r.z + 4 * r.v * r.x - 4 * r.y;
  inv.u3 = r.z * r.z * r.z - r.w * r.z * r.z + 4 * r.v * r.x * r.z - 4 * r.y * r.z -
           4 * r.v * r.v * r.y + 4 * r.w * r.y - 4 * r.x * r.x;
  // U1 vanishes exactly for real scalar matrices, where C1/C2 are chaotic.
  if (inv.u1 > kClassifyTol * std::max(1.0, r.z)) {
    inv.c1 = inv.u2 / (inv.u1 * inv.u1);
    inv.c2 = inv.u3 / (inv.u1 * inv.u1 * inv.u1);
  }
  return inv;
}

std::pair<double, double> characteristic_ckb_values(const Mat2C& a) {
  const InvariantSet s = invariants(a);
  const double lo = s.u - s.abs_d;
  const double mid = s.u + s.abs_d;
  const double hi = lo + 2 * s.e;
  auto ratio = [](double num, double den) {
    return std::sqrt(std::max(0.0, xdiv(num, den, ZeroOverZero::Zero).raw()));
  };
  if (s.e >= s.abs_d) return {ratio(mid, hi), ratio(lo, hi)};
  return {ratio(hi, mid), ratio(lo, mid)};
}

EigenpointData eigenpoints_and_distance(const Mat2C& a, Model model) {
  const auto [l1, l2] = eigenvalues(a);
  const InvariantSet s = invariants(a);
  EigenpointData out;
  out.p1 = iota2(l1, model);
  out.p2 = iota2(l2, model);
  // Eigendistance in terms of r = E/|D| (0/0 reads as 1): 2 artanh sqrt(r)
  // below 1, 2 arcoth sqrt(r) above 1, +inf at r = 1 (a real eigenvalue),
  // 0 at r = inf (equal eigenvalues).
  const XReal r = xdiv(s.e, s.abs_d, ZeroOverZero::One);
  if (!r.finite()) {
    out.distance = XReal(0.0);
  } else if (r.raw() == 1.0) {
    out.distance = XReal::inf();
  } else if (r.raw() > 1.0) {
    const double root = std::sqrt(r.raw());
    out.distance = XReal(std::log((root + 1.0) / (root - 1.0)));
  } else {
    out.distance = XReal(2.0 * std::atanh(std::sqrt(std::max(0.0, r.raw()))));
  }
  return out;
}

namespace {

XReal xatanh(double v) {
  if (v >= 1.0) return XReal::inf();
  return XReal(std::atanh(std::max(0.0, v)));
}

// Q^R(p) / (-4 Q^{R,0}(p)) at an interior point, evaluated in CKBP.
double cr_quotient(const Mat2C& a, const HPoint2& p) {
  const HPoint2 q = convert(p, Model::CKBP);
  if (q.infinity || !q.interior(0.0)) throw Error("interior point required");
  Eigen::Vector3d v(q.x, q.z, 1.0);
  const double num = v.dot(detail::cr_q_ckbp(reduced_five_data(a)) * v);
  const double den = -4.0 * v.dot(base_q3(Model::CKBP) * v);
  return num / den;
}

// Second intersection of the chord from a boundary point through `via` with
// the conic q (the boundary point itself lies on the conic).
HPoint2 second_intersection(const Quadric3& q_ckb, const HPoint2& from_ckb,
                            const HPoint2& via_ckb) {
  const Eigen::Vector3d p0(from_ckb.x, from_ckb.z, 1.0);
  const Eigen::Vector3d dir(via_ckb.x - from_ckb.x, via_ckb.z - from_ckb.z, 0.0);
  const Eigen::Matrix3d& m = q_ckb.m;
  const double alpha = dir.dot(m * dir);
  const double beta = 2.0 * p0.dot(m * dir);
  if (std::abs(alpha) <= 1e-13 * (1.0 + m.norm()) * dir.squaredNorm()) {
    // Degenerate conic along this chord: the interior endpoint is the vertex.
    return via_ckb;
  }
  const double s = -beta / alpha;
  return HPoint2(Model::CKB, from_ckb.x + s * dir(0), from_ckb.z + s * dir(1));
}

}  // namespace

CRShape cr_shape(const Mat2C& a) {
  const auto classify = [&a](double tol) {
    const InvariantSet s = invariants(a, tol);
    const double eps = tol * std::max(1.0, s.u);
    const bool normal = s.u - s.abs_d <= eps;
    CRKind k;
    switch (s.cls) {
      case SpectralClass::RealParabolic:
        k = normal ? CRKind::AsymptoticPoint : CRKind::Horodisk;
        break;
      case SpectralClass::RealElliptic:
      case SpectralClass::NonRealParabolic:
        k = normal ? CRKind::HPointCase : CRKind::HCircleDisk;
        break;
      case SpectralClass::RealHyperbolic:
        k = normal ? CRKind::HLineDouble : CRKind::DistanceBand;
        break;
      case SpectralClass::SemiReal:
        k = normal ? CRKind::HalfLine : CRKind::EllipticParabolaDisk;
        break;
      default:
        k = normal ? CRKind::HSegment : CRKind::HEllipseDisk;
        break;
    }
    return k;
  };

  CRShape shape;
  shape.kind = classify(kClassifyTol);
  // Tolerance ties: rerun the classification with the threshold nudged both
  // ways and surface any alternative reading.
  for (double tol : {kClassifyTol / 4, kClassifyTol * 4}) {
    const CRKind alt = classify(tol);
    if (alt != shape.kind &&
        std::find(shape.borderline.begin(), shape.borderline.end(), alt) ==
            shape.borderline.end())
      shape.borderline.push_back(alt);
  }

  const EigenpointData ep = eigenpoints_and_distance(a);
  shape.eigenpoints = {ep.p1, ep.p2};
  shape.characteristic_ckb = characteristic_ckb_values(a);
  shape.major_semi = xatanh(shape.characteristic_ckb.first);
  shape.minor_semi = xatanh(shape.characteristic_ckb.second);
  return shape;
}

std::pair<double, double> bifocal_check(const Mat2C& a, const HPoint2& p) {
  const InvariantSet s = invariants(a);
  if (s.cls == SpectralClass::RealHyperbolic || s.cls == SpectralClass::RealParabolic ||
      s.cls == SpectralClass::SemiReal)
    throw RealEigenvalue("bifocal_check: matrix has a real eigenvalue");
  const EigenpointData ep = eigenpoints_and_distance(a);
  const double f1 = distance2(p, ep.p1).value();
  const double f2 = distance2(p, ep.p2).value();
  const double mplus = safe_acosh((s.u + s.e) / std::abs(s.abs_d - s.e));
  const double lhs =
      (std::cosh(f1 + f2) - std::cosh(mplus)) * (std::cosh(mplus) - std::cosh(f1 - f2));
  const double gap = s.abs_d - s.e;
  const double rhs = cr_quotient(a, p) / (gap * gap);
  return {lhs, rhs};
}

HPoint2 cr_vertex(const Mat2C& a) {
  const InvariantSet s = invariants(a);
  if (s.cls != SpectralClass::SemiReal)
    throw WrongSpectralClass("cr_vertex: semi-real matrix required");
  auto [l1, l2] = eigenvalues(a);
  if (std::abs(l1.imag()) > std::abs(l2.imag())) std::swap(l1, l2);
  const HPoint2 asym = iota2(Cplx(l1.real(), 0.0), Model::CKB);
  const HPoint2 focus = iota2(l2, Model::CKB);
  return second_intersection(confrange_Q(a, Model::CKB), asym, focus);
}

std::pair<double, double> parabola_check(const Mat2C& a, const HPoint2& p) {
  const InvariantSet s = invariants(a);
  if (s.cls != SpectralClass::SemiReal)
    throw WrongSpectralClass("parabola_check: semi-real matrix required");
  auto [l1, l2] = eigenvalues(a);
  if (std::abs(l1.imag()) > std::abs(l2.imag())) std::swap(l1, l2);
  const HPoint2 asym = iota2(Cplx(l1.real(), 0.0), Model::CKB);
  const HPoint2 focus = iota2(l2, Model::CKB);
  const HPoint2 vertex = cr_vertex(a);

  // Distance function from the real eigenpoint, anchored so d0(V) = 0.
  const double anchor = busemann_ckb2(asym, vertex);
  auto d0 = [&](const HPoint2& q) { return busemann_ckb2(asym, q) - anchor; };

  const double dfoc = distance2(p, focus).value();
  const double lhs =
      (std::cosh(dfoc) - std::cosh(d0(p) + d0(focus))) * std::exp(d0(p) - d0(focus));
  const double rhs = cr_quotient(a, p) / (4.0 * s.abs_d * (s.u + s.abs_d));
  return {lhs, rhs};
}

std::pair<double, double> band_horo_check(const Mat2C& a, const HPoint2& p) {
  const InvariantSet s = invariants(a);
  if (s.cls == SpectralClass::RealHyperbolic) {
    const auto [l1, l2] = eigenvalues(a);
    const HPoint2 e1 = iota2(Cplx(l1.real(), 0.0), Model::CKB);
    const HPoint2 e2 = iota2(Cplx(l2.real(), 0.0), Model::CKB);
    const double d = hline_distance2(convert(p, Model::CKB), e1, e2);
    const double sm = 0.5 * safe_acosh(s.u / s.abs_d);
    const double lhs = std::cosh(2 * d) - std::cosh(2 * sm);
    const double rhs = cr_quotient(a, p) / (s.abs_d * (s.u + s.abs_d));
    return {lhs, rhs};
  }
  if (s.cls == SpectralClass::RealParabolic) {
    const double eps = kClassifyTol * std::max(1.0, s.u);
    if (s.u - s.abs_d <= eps) {
      // Degenerate horodisk of a real scalar matrix: d0 is identically +inf.
      const double inf = std::numeric_limits<double>::infinity();
      return {inf, inf};
    }
    const auto [l1, l2] = eigenvalues(a);
    (void)l2;
    const HPoint2 asym = iota2(Cplx(l1.real(), 0.0), Model::CKB);
    const HPoint2 origin(Model::CKB, 0, 0);
    const HPoint2 w0 = second_intersection(confrange_Q(a, Model::CKB), asym, origin);
    const double anchor = busemann_ckb2(asym, w0);
    const double d0 = busemann_ckb2(asym, convert(p, Model::CKB)) - anchor;
    const double lhs = std::exp(2 * d0) - 1.0;
    const double rhs = cr_quotient(a, p) / (s.u * s.u);
    return {lhs, rhs};
  }
  throw WrongSpectralClass("band_horo_check: real-hyperbolic or real-parabolic required");
}

CROrientedDistances cr_oriented_distances(const Mat2C& a) {
  const InvariantSet s = invariants(a);
  if (s.cls != SpectralClass::RealElliptic && s.cls != SpectralClass::RealParabolic &&
      s.cls != SpectralClass::RealHyperbolic)
    throw WrongSpectralClass("cr_oriented_distances: matrix of real type required");
  const ShellDistances d = shell_characteristic_distances(a);
  return {d.dis_origin, d.dis_horo, d.dis_norm};
}

namespace {

struct RootCluster {
  Cplx value;
  int multiplicity = 0;
};

std::vector<Cplx> quartic_roots(double v, double w, double x, double y) {
  // lambda^4 - 2V lambda^3 + W lambda^2 - 2X lambda + Y via the companion
  // matrix.
  Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
  c(0, 3) = -y;
  c(1, 3) = 2 * x;
  c(2, 3) = -w;
  c(3, 3) = 2 * v;
  c(1, 0) = c(2, 1) = c(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(c);
  std::vector<Cplx> roots;
  for (int i = 0; i < 4; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

bool multiset_match(std::vector<Cplx> a, const std::vector<Cplx>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Cplx& z : b) {
    auto best = a.end();
    double best_d = tol * (1.0 + std::abs(z));
    for (auto it = a.begin(); it != a.end(); ++it) {
      const double d = std::abs(*it - z);
      if (d <= best_d) {
        best_d = d;
        best = it;
      }
    }
    if (best == a.end()) return false;
    a.erase(best);
  }
  return true;
}

bool multiset_match_real(std::vector<double> a, const std::vector<double>& b, double tol) {
  std::sort(a.begin(), a.end());
  std::vector<double> bs = b;
  std::sort(bs.begin(), bs.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - bs[i]) > tol * (1.0 + std::abs(bs[i]))) return false;
  return true;
}

}  // namespace

std::vector<CRCandidate> cr_reconstruct(const Quadric3& m_in,
                                        std::optional<SpectralClass> shape_hint) {
  const Quadric3 m = to_model(m_in, Model::CKBP);
  const double scale = m.m.norm();
  if (scale == 0.0)
    throw UnderdeterminedRealScalar(
        "cr_reconstruct: the zero quadric belongs to every real scalar matrix");

  // Normalize to the dual form G with G(3,3) = 1.
  Eigen::Matrix3d g;
  if (m.role == Role3::CRDual || m.role == Role3::CRBaseDual) {
    if (std::abs(m.m(2, 2)) <= 1e-12 * scale)
      throw NotAConformalRangeQuadric("cr_reconstruct: dual quadric with vanishing (3,3)");
    g = m.m / m.m(2, 2);
  } else {
    const Eigen::Matrix3d adj = adjugate3(m.m);
    const double core = m.m(0, 0) * m.m(1, 1) - m.m(0, 1) * m.m(1, 0);  // = adj(2,2)
    if (std::abs(core) <= 1e-12 * scale * scale)
      throw NotAConformalRangeQuadric(
          "cr_reconstruct: rank-deficient boundary quadric; pass the dual form "
          "for degenerate ranges");
    g = adj / core;
  }

  // Read the reduced five data off G and sanity-check it.
  ReducedFiveData r;
  r.v = 2 * g(0, 2);
  r.z = 2 * g(1, 2);
  r.w = 4 * g(0, 0) + r.z;
  r.x = 2 * g(0, 1);
  r.y = g(1, 1);
  const double eps = 1e-9 * std::max(1.0, r.z * r.z);
  if (r.y < -eps || r.z < -eps || r.z * r.z - 4 * r.y < -eps)
    throw NotAConformalRangeQuadric("cr_reconstruct: reduced five data out of range");

  // Eigen-sign pattern: the eigenvalues of G * base_q are -(..)/2 <= 0, and
  // doubled they give the multiset {U-|D|, U+|D|, U-|D|+2E}.
  std::vector<double> eig = real_eigenvalues(Eigen::MatrixXd(g * base_q3(Model::CKBP)));
  std::vector<double> mult;
  for (double e : eig) {
    if (e > eps) throw NotAConformalRangeQuadric("cr_reconstruct: eigen-sign pattern broken");
    mult.push_back(std::max(0.0, -2.0 * e));
  }
  std::sort(mult.begin(), mult.end());

  // Spectral candidates: quartic roots come as {l1, conj l1, l2, conj l2}.
  const std::vector<Cplx> roots = quartic_roots(r.v, r.w, r.x, r.y);
  double rscale = 1.0;
  for (const Cplx& z : roots) rscale = std::max(rscale, std::abs(z));
  const double rtol = 1e-7 * rscale;

  std::vector<RootCluster> clusters;
  for (Cplx z : roots) {
    if (std::abs(z.imag()) <= rtol) z = Cplx(z.real(), 0.0);
    bool merged = false;
    for (RootCluster& c : clusters) {
      if (std::abs(c.value - z) <= rtol) {
        c.value = (c.value * double(c.multiplicity) + z) / double(c.multiplicity + 1);
        ++c.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back({z, 1});
  }
  // Conjugation closure.
  for (const RootCluster& c : clusters) {
    if (std::abs(c.value.imag()) == 0.0) continue;
    bool found = false;
    for (const RootCluster& d : clusters)
      if (std::abs(d.value - std::conj(c.value)) <= rtol && d.multiplicity == c.multiplicity)
        found = true;
    if (!found)
      throw NotAConformalRangeQuadric("cr_reconstruct: roots not closed under conjugation");
  }

  std::vector<CRCandidate> out;
  auto try_pair = [&](Cplx l1, Cplx l2) {
    if (!multiset_match({l1, std::conj(l1), l2, std::conj(l2)}, roots, 4 * rtol)) return;
    const double abs_d = std::norm(l1 - l2) / 4.0;
    const double e = std::norm(l1 - std::conj(l2)) / 4.0;
    const double u = mult[0] + abs_d;
    if (!multiset_match_real({mult[0], u + abs_d, u - abs_d + 2 * e}, mult, 1e-6)) return;
    CRCandidate cand;
    cand.form.t = std::sqrt(2.0 * std::max(0.0, mult[0]));
    // Deterministic eigenvalue order: the "+" square-root branch first
    // (-D = ((l1 - l2)/2)^2).
    const Cplx tr = l1 + l2;
    const Cplx mu = principal_sqrt((l1 - l2) * (l1 - l2) / 4.0);
    if (std::abs(tr / 2.0 + mu - l1) <= std::abs(tr / 2.0 + mu - l2)) {
      cand.form.lam1 = l1;
      cand.form.lam2 = l2;
    } else {
      cand.form.lam1 = l2;
      cand.form.lam2 = l1;
    }
    cand.cls = invariants(cand.form.matrix()).cls;
    for (const CRCandidate& c : out) {
      const bool same =
          (std::abs(c.form.lam1 - cand.form.lam1) <= 4 * rtol &&
           std::abs(c.form.lam2 - cand.form.lam2) <= 4 * rtol) &&
          std::abs(c.form.t - cand.form.t) <= 4 * rtol;
      if (same) return;
    }
    out.push_back(cand);
  };

  for (size_t i = 0; i < clusters.size(); ++i)
    for (size_t j = i; j < clusters.size(); ++j) {
      if (i == j && clusters[i].multiplicity < 2) continue;
      try_pair(clusters[i].value, clusters[j].value);
    }

  if (out.empty())
    throw NotAConformalRangeQuadric("cr_reconstruct: no consistent spectral reading");

  if (shape_hint) {
    std::vector<CRCandidate> filtered;
    for (const CRCandidate& c : out)
      if (c.cls == *shape_hint) filtered.push_back(c);
    if (!filtered.empty()) return filtered;
  }
  return out;
}

}  // namespace shellrange
