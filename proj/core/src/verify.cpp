#include "shellrange/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "shellrange/confrange.hpp"
#include "shellrange/mobius.hpp"
#include "shellrange/numrange.hpp"
#include "shellrange/oracle.hpp"
#include "shellrange/shell.hpp"

namespace shellrange {

namespace {

double rel(double err, double scale) { return std::abs(err) / std::max(1.0, std::abs(scale)); }

std::vector<double> to_vec(const std::array<double, 5>& a) {
  return std::vector<double>(a.begin(), a.end());
}

double vec_rel(const std::vector<double>& got, const std::vector<double>& want) {
  double worst = 0, scale = 1;
  for (double w : want) scale = std::max(scale, std::abs(w));
  for (size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
  return worst / scale;
}

struct Recorder {
  std::vector<CheckResult>* out;
  void add(const std::string& name, double residual, double tol) {
    for (CheckResult& r : *out) {
      if (r.name == name) {
        r.residual = std::max(r.residual, residual);
        r.pass = r.pass && residual <= tol;
        return;
      }
    }
    out->push_back({name, residual, tol, residual <= tol});
  }
};

void check_matrix(const Mat2C& a, Recorder& rec) {
  const FiveData f = five_data(a);
  const InvariantSet inv = invariants(a);
  const double u = inv.u, ad = inv.abs_d;
  const double disc = u * u - ad * ad;
  const double eps = kClassifyTol * std::max(1.0, u);
  const bool normal = u - ad <= eps;
  const double scale2 = std::max(1.0, u * u);

  // --- algebra ---
  {
    const auto [nrm, conrm] = norm_conorm(a);
    rec.add("norm-conorm-product", rel(nrm * conrm - std::abs(a.det()), std::abs(a.det())),
            1e-12);

    const Mat2C comm = a.adjoint() * a - a * a.adjoint();
    const Mat2C cc = comm.adjoint() * comm;
    rec.add("commutator-identity", rel((cc.a11 + cc.a22).real() - 8.0 * disc, 8 * scale2),
            1e-10);

    const auto [form, q] = canonical_triangular(a);
    rec.add("triangular-reconstruction",
            vec_rel(to_vec(five_data(form.matrix()).as_array()), to_vec(f.as_array())), 1e-9);
    const Mat2C qq = q.adjoint() * q - Mat2C::identity();
    rec.add("triangular-witness-unitary", qq.frobenius_norm(), 1e-12);
    const Mat2C tri = q.adjoint() * a * q;
    rec.add("triangular-witness-conjugates",
            std::abs(tri.a21) + rel(std::abs(tri.a12) - form.t, 1.0), 1e-9);

    const auto [l1, l2] = eigenvalues(a);
    // Class recomputed straight from the eigenvalue positions.
    const double im_prod = l1.imag() * l2.imag();
    const double leps = 1e-9 * (1.0 + std::abs(l1) + std::abs(l2));
    SpectralClass direct;
    if (std::abs(l1.imag()) <= leps && std::abs(l2.imag()) <= leps)
      direct = std::abs(l1 - l2) <= leps ? SpectralClass::RealParabolic
                                         : SpectralClass::RealHyperbolic;
    else if (std::abs(l1 - l2) <= leps)
      direct = SpectralClass::NonRealParabolic;
    else if (std::abs(l1 - std::conj(l2)) <= leps)
      direct = SpectralClass::RealElliptic;
    else if (std::abs(im_prod) <= leps * (std::abs(l1) + std::abs(l2) + 1.0))
      direct = SpectralClass::SemiReal;
    else
      direct = im_prod < 0 ? SpectralClass::QuasiElliptic : SpectralClass::QuasiHyperbolic;
    rec.add("classification-vs-eigenvalues", direct == inv.cls ? 0.0 : 1.0, 0.5);
  }

  // --- shell ---
  {
    const Eigen::Matrix4d q = shell_Q(a).m;
    const Eigen::Matrix4d g = shell_G(a).m;
    rec.add("shell-det-q", rel(q.determinant() + 4 * disc * disc, disc * disc), 1e-8);
    rec.add("shell-det-g", rel(g.determinant() + 0.25 * disc * disc, disc * disc), 1e-8);
    if (!normal) {
      rec.add("shell-qg-product",
              ((q * g + disc * Eigen::Matrix4d::Identity()).norm()) / std::max(1.0, disc),
              1e-9);
    }
    const auto [eq, eg] = shell_eigen_ratios(a);
    rec.add("shell-eig-q",
            vec_rel(eq, {2 * (u - ad), 2 * (u - ad), 2 * (u + ad), 2 * (u + ad)}), 1e-7);
    rec.add("shell-eig-g",
            vec_rel(eg, {-(u + ad) / 2, -(u + ad) / 2, -(u - ad) / 2, -(u - ad) / 2}), 1e-7);

    // Pencil identity at a fixed probe value.
    const Eigen::Matrix4d qs = detail::shell_q_spec_ckbp(f);
    const Eigen::Matrix4d gs = detail::shell_g_spec_ckbp(f);
    const Eigen::Matrix4d q0 = base_q4(Model::CKBP);
    const Eigen::Matrix4d g0 = base_g4(Model::CKBP);
    const double lam = 0.625 * std::max(1.0, u);
    const Eigen::Matrix4d lhs = (lam * 2 * q0 + qs) * (lam * (-0.5) * g0 + gs);
    const Eigen::Matrix4d rhs = -(lam * lam - ad * ad) * Eigen::Matrix4d::Identity();
    rec.add("shell-pencil-identity",
            (lhs - rhs).norm() / std::max(1.0, lam * lam + ad * ad), 1e-9);

    const Eigen::Matrix4d s = shell_sample_matrix(a);
    rec.add("shell-sample-det", rel(s.determinant() - disc / 2, disc), 1e-9);
    Eigen::Matrix4d j = Eigen::Matrix4d::Identity();
    j(3, 3) = -1;
    rec.add("shell-sample-dual", ((s * j * s.transpose() + g).norm()) / std::max(1.0, g.norm()),
            1e-9);

    const ShellBlocks blocks = shell_block_decomposition(a);
    rec.add("shell-block-q",
            (blocks.q_witness.transpose() * blocks.q_blocks * blocks.q_witness - q).norm() /
                std::max(1.0, q.norm()),
            1e-9);
    rec.add("shell-block-g",
            (blocks.g_witness.transpose() * blocks.g_blocks * blocks.g_witness - g).norm() /
                std::max(1.0, g.norm()),
            1e-9);

    const Eigen::Matrix4d sw = shell_similarity_witness(a);
    rec.add("shell-similarity",
            (q0.inverse() * q - sw * (-4.0 * g * q0) * sw.inverse()).norm() /
                std::max(1.0, q.norm()),
            1e-9);

    rec.add("shell-ucomp", rel((q0.inverse() * q).trace() / 8.0 - u, u), 1e-10);

    const FiveData back = five_data_from_shell(shell_Q(a));
    rec.add("shell-five-data-roundtrip",
            vec_rel(to_vec(back.as_array()), to_vec(f.as_array())), 1e-9);

    // Center from the last column of G.
    const HPoint3 c = shell_center(a);
    rec.add("shell-center-from-g",
            rel(g(0, 3) - c.x, c.z) + rel(g(1, 3) - c.y, c.z) + rel(g(2, 3) - c.z, c.z) +
                rel(g(3, 3) - 1.0, 1.0),
            1e-12);

    // Vertical line through the center meets the shell at the closed-form
    // heights.
    const auto [zlo, zhi] = shell_vertical_diameter(a);
    for (double zz : {zlo, zhi}) {
      Eigen::Vector4d v(c.x, c.y, zz, 1.0);
      rec.add("shell-vertical-diameter", std::abs(v.dot(q * v)) / std::max(1.0, q.norm()),
              1e-9);
    }

    // Pencil members are nonnegative on the closed model.
    const auto [axis, biplanar] = shell_pencil_members(a);
    const CounterRng rng(0xABCD);
    double worst = 0;
    for (int i = 0; i < 64; ++i) {
      const Cplx l(2.0 * rng.uniform(i, 40) - 1.0, 2.0 * rng.uniform(i, 41) - 1.0);
      const double t = rng.uniform(i, 42);
      const HPoint3 pt(Model::CKBP, l.real(), l.imag(),
                       std::norm(l) + 3.0 * t);  // interior or boundary
      worst = std::min({worst, axis(pt) / std::max(1.0, axis.m.norm()),
                        biplanar(pt) / std::max(1.0, biplanar.m.norm())});
    }
    rec.add("shell-pencil-nonnegative", -worst, 1e-10);
  }

  // --- numerical range ---
  {
    const Eigen::Matrix3d qw = numrange_Q(a).m;
    const Eigen::Matrix3d gw = numrange_G(a).m;
    rec.add("w-rao1", (qw + 4.0 * adjugate3(gw)).norm() / std::max(1.0, qw.norm()), 1e-10);
    rec.add("w-rao2", rel(gw.determinant() - disc / 4, disc), 1e-9);
    rec.add("w-rao3", rel(qw.determinant() + 4 * disc * disc, disc * disc), 1e-8);
    rec.add("w-rao4", (adjugate3(qw) - 4.0 * disc * gw).norm() / std::max(1.0, disc), 1e-8);
    rec.add("w-core-trace", rel(qw.topLeftCorner<2, 2>().trace() - 4 * u, u), 1e-10);
    rec.add("w-core-matches-shell", (qw.topLeftCorner<2, 2>() - shell_core_Q(a)).norm() /
                                        std::max(1.0, qw.norm()),
            1e-12);

    const UhligBlocks ub = numrange_uhlig_blocks(a);
    const Eigen::Matrix3d wi = ub.witness.inverse();
    rec.add("w-uhlig-q", (wi.transpose() * ub.q_blocks * wi - qw).norm() /
                             std::max(1.0, qw.norm()),
            1e-9);
    rec.add("w-uhlig-g",
            (ub.witness * ub.g_blocks * ub.witness.transpose() - gw).norm() /
                std::max(1.0, gw.norm()),
            1e-9);
    rec.add("w-uhlig-eigs",
            vec_rel(real_eigenvalues(ub.q_blocks), [&] {
              std::vector<double> want = {2 * (u - ad), 2 * (u + ad), -disc};
              std::sort(want.begin(), want.end());
              return want;
            }()),
            1e-7);

    if (!normal) {
      const auto [f1, f2] = numrange_focal_roots(numrange_G(a));
      const auto [l1, l2] = eigenvalues(a);
      const double d = std::min(std::abs(f1 - l1) + std::abs(f2 - l2),
                                std::abs(f1 - l2) + std::abs(f2 - l1));
      rec.add("w-focal-roots", d / (1.0 + std::abs(l1) + std::abs(l2)), 1e-8);
    }

    // The three projection routes.
    const Eigen::Matrix4d q4 = shell_Q(a).m;
    const Eigen::MatrixXd disc_route = project_quadratic(q4, 2, ProjectionMethod::Discriminant);
    rec.add("w-projection-disc",
            (disc_route + 4.0 * qw).norm() / std::max(1.0, qw.norm()), 1e-9);
    const Eigen::MatrixXd elim_route = project_quadratic(q4, 2, ProjectionMethod::Eliminate);
    rec.add("w-projection-elim", (elim_route - qw).norm() / std::max(1.0, qw.norm()), 1e-9);
    if (!normal) {
      const Eigen::MatrixXd iri_route =
          project_quadratic(q4, 2, ProjectionMethod::InverseRestrictInverse);
      rec.add("w-projection-iri", (iri_route - qw).norm() / std::max(1.0, qw.norm()), 1e-8);
    }

    // Rank table.
    const double thr = 1e-9 * std::max(1.0, u * u);
    const int rq = rank_of(qw, thr), rg = rank_of(gw, thr);
    const bool parab = ad <= eps;
    const int want_rq = !normal ? 3 : (parab ? 0 : 1);
    const int want_rg = !normal ? 3 : (parab ? 1 : 2);
    rec.add("w-rank-table", (rq == want_rq && rg == want_rg) ? 0.0 : 1.0, 0.5);

    if (normal && !parab) {
      const Eigen::Matrix3d pick = Eigen::Vector3d(1, 1, 0).asDiagonal();
      rec.add("w-normal-eigengap",
              rel(std::sqrt(std::max(0.0, (pick * qw).trace())) - 2 * std::sqrt(ad),
                  std::sqrt(ad)),
              1e-7);
    }

    // Membership of sampled field values.
    const auto pts = sample_numrange(a, 128, 0x5EED);
    double worst = 0;
    for (const Cplx& z : pts) worst = std::max(worst, numrange_Q(a)(z));
    rec.add("w-membership", worst / std::max(1.0, qw.norm()), 1e-9);
  }

  // --- conformal range ---
  {
    const ReducedFiveData r = reduced_five_data(a);
    const Eigen::Matrix3d qr = confrange_Q(a).m;
    const Eigen::Matrix3d gr = confrange_G(a).m;
    const double e = inv.e;
    const double detg_closed = 0.5 * (u - ad + 2 * e) * disc;
    const double scale3 = std::max(1.0, u * u * u);

    rec.add("cr-gadj", (qr + 4.0 * adjugate3(gr)).norm() / std::max(1.0, qr.norm()), 1e-10);
    rec.add("cr-det-g", rel(gr.determinant() - detg_closed, scale3), 1e-9);
    const double detg_poly =
        (std::pow(r.z, 3) - r.w * r.z * r.z + 4 * r.v * r.x * r.z - 4 * r.y * r.z -
         4 * r.v * r.v * r.y + 4 * r.w * r.y - 4 * r.x * r.x) /
        16.0;
    rec.add("cr-det-g-poly", rel(gr.determinant() - detg_poly, scale3), 1e-9);
    rec.add("cr-det-q",
            rel(qr.determinant() + 64.0 * gr.determinant() * gr.determinant(),
                scale3 * scale3),
            1e-9);
    rec.add("cr-chr1",
            (adjugate3(qr) - 16.0 * gr.determinant() * gr).norm() /
                std::max(1.0, 16.0 * std::abs(gr.determinant())),
            1e-9);
    rec.add("cr-core0",
            rel(qr.topLeftCorner<2, 2>().determinant() - 16.0 * gr.determinant(), scale3),
            1e-9);

    const auto [eg, eq] = cr_eigen_ratios(a);
    rec.add("cr-eig-g",
            vec_rel(eg, [&] {
              std::vector<double> want = {-(u - ad) / 2, -(u + ad) / 2, -(u - ad + 2 * e) / 2};
              std::sort(want.begin(), want.end());
              return want;
            }()),
            1e-7);
    rec.add("cr-eig-q",
            vec_rel(eq, [&] {
              std::vector<double> want = {4 * (u - ad) * (u + ad),
                                          4 * (u - ad) * (u - ad + 2 * e),
                                          4 * (u + ad) * (u - ad + 2 * e)};
              std::sort(want.begin(), want.end());
              return want;
            }()),
            1e-7);

    const CRInvariants cri = cr_invariants(a);
    const double s1 = 2 * (u - ad), s2 = 2 * (u + ad), s3 = 2 * (u - ad + 2 * e);
    rec.add("cr-uu1", rel(cri.u1 - (s1 + s2 + s3), scale2), 1e-9);
    rec.add("cr-uu2", rel(cri.u2 - (s1 * s2 + s1 * s3 + s2 * s3), scale2 * scale2), 1e-9);
    rec.add("cr-uu3", rel(cri.u3 - s1 * s2 * s3, scale3 * scale3), 1e-9);

    // Projection routes from the shell.
    const Eigen::Matrix4d q4 = shell_Q(a).m;
    const double kappa = r.z - 2.0 * f.re_det;  // tr(A*A) - 2 Re det A
    const Eigen::MatrixXd disc_route = project_quadratic(q4, 1, ProjectionMethod::Discriminant);
    rec.add("cr-projection-disc", (disc_route + 4.0 * qr).norm() / std::max(1.0, qr.norm()),
            1e-9);
    if (!normal) {
      const Eigen::MatrixXd elim_route = project_quadratic(q4, 1, ProjectionMethod::Eliminate);
      rec.add("cr-projection-elim",
              (elim_route - qr / kappa).norm() / std::max(1.0, qr.norm() / kappa), 1e-9);
      const Eigen::MatrixXd iri_route =
          project_quadratic(q4, 1, ProjectionMethod::InverseRestrictInverse);
      rec.add("cr-projection-iri",
              (iri_route - qr / kappa).norm() / std::max(1.0, qr.norm() / kappa), 1e-8);
    }

    // Rank tables (conjugate-or-equal eigenvalues collapse one more rank).
    const double thr = 1e-9 * std::max(1.0, u * u);
    const bool conj_or_equal = e <= eps && normal;
    const int want_rq = !normal ? 3 : (conj_or_equal ? 0 : 1);
    const int want_rg = !normal ? 3 : (conj_or_equal ? 1 : 2);
    rec.add("cr-rank-table",
            (rank_of(qr, thr) == want_rq && rank_of(gr, thr) == want_rg) ? 0.0 : 1.0, 0.5);

    if (normal && !conj_or_equal) {
      const Eigen::Matrix3d g0q = base_g3(Model::CKBP) * qr;
      rec.add("cr-segment-eigengap",
              rel(std::sqrt(std::max(0.0, g0q.trace())) - 4 * std::sqrt(ad * e),
                  4 * std::sqrt(ad * e)),
              1e-7);
    }

    // Membership of sampled conformal-range points.
    const SampleCloud cloud = sample_cr(a, 128, 0x5EED);
    double worst = 0;
    for (const HPoint2& p : cloud.points2) worst = std::max(worst, confrange_Q(a)(p));
    rec.add("cr-membership", worst / std::max(1.0, qr.norm()), 1e-9);

    // Hyperbolic focal quartic evaluates to |det(A - l)|^2 at probe points.
    double worst_f = 0;
    for (double l : {-1.5, -0.25, 0.0, 0.5, 2.0}) {
      Eigen::Vector3d v(2 * l, -1.0, -l * l);
      const Mat2C shift = a - Mat2C::diag(l, l);
      const double want = std::norm(shift.det());
      worst_f = std::max(worst_f, rel(v.dot(gr * v) - want, want));
    }
    rec.add("cr-hypfocal", worst_f, 1e-9);

    // Characteristic values against the arcosh displays.
    const auto [v1, v2] = characteristic_ckb_values(a);
    if (!normal) {
      const double big = std::max(ad, e), small = std::min(ad, e);
      const double denom_major = big - small;
      if (denom_major > eps) {
        const double major = std::atanh(std::min(1.0 - 1e-16, v1));
        rec.add("cr-charval-major",
                rel(std::cosh(2 * major) - (u + e) / denom_major, (u + e) / denom_major),
                1e-7);
      }
      const double denom_minor = e >= ad ? e : ad;
      if (denom_minor > eps && v2 < 1.0) {
        const double minor = std::atanh(v2);
        const double want = e >= ad ? (u - ad + e) / e : u / ad;
        rec.add("cr-charval-minor", rel(std::cosh(2 * minor) - want, want), 1e-7);
      }
      // Pythagorean law whenever every term is finite.
      const EigenpointData ep = eigenpoints_and_distance(a);
      if (v1 < 1.0 && ep.distance.finite()) {
        const double splus = std::atanh(v1), sminus = std::atanh(v2);
        rec.add("cr-pythagoras",
                rel(std::cosh(splus) - std::cosh(sminus) * std::cosh(ep.distance.value() / 2),
                    std::cosh(splus)),
                1e-9);
      }
    }

    // Reduced five data <-> norm/co-norm polynomial families at sample
    // points.
    double worst_c = 0;
    for (double l : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
      const Mat2C shift = a - Mat2C::diag(l, l);
      const double p1 = std::norm(shift.det());
      const double p2 = shift.gram_trace();
      const double q1 = std::pow(l, 4) - 2 * r.v * std::pow(l, 3) + r.w * l * l -
                        2 * r.x * l + r.y;
      const double q2 = 2 * l * l - 2 * r.v * l + r.z;
      worst_c = std::max({worst_c, rel(p1 - q1, q1), rel(p2 - q2, q2)});
    }
    rec.add("cr-compar", worst_c, 1e-9);

    // Reconstruction round trip, with the class-dependent candidate count.
    try {
      const auto cands = cr_reconstruct(normal ? confrange_G(a) : confrange_Q(a));
      size_t want = 0;
      switch (inv.cls) {
        case SpectralClass::RealHyperbolic:
        case SpectralClass::RealParabolic: want = 1; break;
        case SpectralClass::SemiReal: want = 2; break;
        case SpectralClass::RealElliptic:
        case SpectralClass::NonRealParabolic: want = 3; break;
        default: want = 4; break;
      }
      double worst_r = cands.size() == want ? 0.0 : 1.0;
      for (const auto& c : cands) {
        const ReducedFiveData rr = reduced_five_data(c.form.matrix());
        worst_r = std::max(worst_r, vec_rel(to_vec(rr.as_array()), to_vec(r.as_array())));
      }
      rec.add("cr-reconstruct-roundtrip", worst_r, 1e-8);
    } catch (const UnderdeterminedRealScalar&) {
      // Real scalar matrices have the zero quadric: nothing to invert.
    } catch (const Error&) {
      rec.add("cr-reconstruct-roundtrip", 1.0, 1e-8);
    }
  }
}

void check_mobius_pair(const MobiusMap& mf, const Mat2C& a, Recorder& rec) {
  const InvariantSet ia = invariants(a);
  Mat2C fa = Mat2C::zero();
  try {
    fa = mobius_apply(mf, a);
  } catch (const SingularResolvent&) {
    return;  // not applicable; skip
  }
  const InvariantSet ib = invariants(fa);
  const double c = scaling_factor(mf, a);
  rec.add("mobius-c-positive", c > 0 ? 0.0 : 1.0, 0.5);
  rec.add("mobius-u-scaling", rel(ib.u * c - ia.u, ia.u), 1e-8);
  rec.add("mobius-d-scaling", rel(ib.abs_d * c - ia.abs_d, ia.u), 1e-8);

  const Eigen::Matrix4d rp = mobius_projective_rep(mf, Model::CKBP);
  const Eigen::Matrix4d ri = rp.inverse();
  const Eigen::Matrix4d qa = shell_Q(a).m, qb = shell_Q(fa).m;
  const Eigen::Matrix4d ga = shell_G(a).m, gb = shell_G(fa).m;
  const Eigen::Matrix4d q_rhs = ri.transpose() * qa * ri;
  const Eigen::Matrix4d g_rhs = rp * ga * rp.transpose();
  rec.add("mobius-q-covariance",
          (qb * c - q_rhs).norm() / std::max({1.0, qa.norm(), q_rhs.norm()}), 1e-8);
  rec.add("mobius-g-covariance",
          (gb * c - g_rhs).norm() / std::max({1.0, ga.norm(), g_rhs.norm()}), 1e-8);

  if (mf.is_real()) {
    rec.add("mobius-e-scaling", rel(ib.e * c - ia.e, ia.u + ia.e), 1e-8);
    const CRInvariants ca = cr_invariants(a), cb = cr_invariants(fa);
    rec.add("mobius-u1-scaling", rel(cb.u1 * c - ca.u1, ca.u1), 1e-8);
    rec.add("mobius-u2-scaling", rel(cb.u2 * c * c - ca.u2, ca.u2), 1e-8);
    rec.add("mobius-u3-scaling", rel(cb.u3 * c * c * c - ca.u3, ca.u3), 1e-8);

    const Eigen::Matrix3d r2 = mobius_projective_rep2(mf, Model::CKBP);
    const Eigen::Matrix3d r2i = r2.inverse();
    const Eigen::Matrix3d qra = confrange_Q(a).m, qrb = confrange_Q(fa).m;
    const Eigen::Matrix3d gra = confrange_G(a).m, grb = confrange_G(fa).m;
    const Eigen::Matrix3d qr_rhs = r2i.transpose() * qra * r2i;
    const Eigen::Matrix3d gr_rhs = r2 * gra * r2.transpose();
    rec.add("mobius-qr-covariance",
            (qrb * c * c - qr_rhs).norm() / std::max({1.0, qra.norm(), qr_rhs.norm()}), 1e-8);
    rec.add("mobius-gr-covariance",
            (grb * c - gr_rhs).norm() / std::max({1.0, gra.norm(), gr_rhs.norm()}), 1e-8);

    // Strictly covariant normalizations.
    if (ca.c1 && cb.c1) {
      const Eigen::Matrix3d ta = gra / ca.u1, tb = grb / cb.u1;
      rec.add("mobius-gr-normalized",
              (tb - r2 * ta * r2.transpose()).norm() / std::max(1.0, ta.norm()), 1e-8);
    }
  }
}

}  // namespace

Mat2C random_gaussian_matrix(std::uint64_t seed, std::uint64_t index) {
  const CounterRng rng(seed);
  return Mat2C(rng.cgaussian(index, 0), rng.cgaussian(index, 1), rng.cgaussian(index, 2),
               rng.cgaussian(index, 3));
}

Mat2C random_unitary(std::uint64_t seed, std::uint64_t index) {
  const CounterRng rng(seed);
  const double th = rng.uniform(index, 16) * 3.14159265358979323846 / 2;
  const double p1 = rng.uniform(index, 17) * 2 * 3.14159265358979323846;
  const double p2 = rng.uniform(index, 18) * 2 * 3.14159265358979323846;
  const double p3 = rng.uniform(index, 19) * 2 * 3.14159265358979323846;
  const Cplx e1 = std::polar(1.0, p1), e2 = std::polar(1.0, p2), e3 = std::polar(1.0, p3);
  return Mat2C(e1 * std::cos(th), e2 * std::sin(th), -std::conj(e2) * e3 * std::sin(th),
               std::conj(e1) * e3 * std::cos(th));
}

std::vector<CheckResult> verify_matrix(const Mat2C& a) {
  std::vector<CheckResult> out;
  Recorder rec{&out};
  check_matrix(a, rec);

  // Unitary invariance of the five data.
  const Mat2C q = random_unitary(0xF00D, 7);
  const Mat2C conj = q.adjoint() * a * q;
  rec.add("unitary-invariance",
          vec_rel(to_vec(five_data(conj).as_array()), to_vec(five_data(a).as_array())),
          1e-10);
  return out;
}

std::vector<CheckResult> verify_fuzz(std::size_t n, std::uint64_t seed) {
  std::vector<CheckResult> out;
  Recorder rec{&out};
  const CounterRng rng(seed ^ 0x777);

  for (std::size_t i = 0; i < n; ++i) {
    const Mat2C a = random_gaussian_matrix(seed, i);
    check_matrix(a, rec);

    const Mat2C q = random_unitary(seed ^ 0xBEEF, i);
    rec.add("unitary-invariance",
            vec_rel(to_vec(five_data(q.adjoint() * a * q).as_array()),
                    to_vec(five_data(a).as_array())),
            1e-10);
  }

  // Moebius covariance pairs, complex and real, plus pole hits.
  const std::size_t pairs = std::max<std::size_t>(8, n / 5);
  for (std::size_t i = 0; i < pairs; ++i) {
    const Mat2C a = random_gaussian_matrix(seed ^ 0xAB, i);
    MobiusMap mf = MobiusMap::identity();
    try {
      if (i % 2 == 0) {
        mf = MobiusMap(rng.cgaussian(i, 4), rng.cgaussian(i, 5), rng.cgaussian(i, 6),
                       rng.cgaussian(i, 7));
      } else {
        mf = MobiusMap(rng.gaussian(i, 8), rng.gaussian(i, 9), rng.gaussian(i, 10),
                       rng.gaussian(i, 11));
      }
    } catch (const InvalidInput&) {
      continue;
    }
    check_mobius_pair(mf, a, rec);

    // A map whose pole sits on an eigenvalue has scaling factor zero.
    const auto [l1, l2] = eigenvalues(a);
    (void)l2;
    try {
      const MobiusMap at_pole(1.0, 0.0, 1.0, -l1);
      rec.add("mobius-c-zero-at-pole", std::abs(scaling_factor(at_pole, a)), 1e-10);
    } catch (const InvalidInput&) {
    }
  }

  // Model-level properties.
  double worst_rt = 0, worst_dist = 0, worst_iota = 0, worst_branch = 0;
  for (std::size_t i = 0; i < std::max<std::size_t>(n, 100); ++i) {
    const double x = 2 * rng.uniform(i, 20) - 1, y = 2 * rng.uniform(i, 21) - 1,
                 zc = 2 * rng.uniform(i, 22) - 1;
    const double nrm = std::sqrt(x * x + y * y + zc * zc);
    const double shrink = 0.98 * std::pow(rng.uniform(i, 23), 0.34);
    if (nrm == 0) continue;
    const HPoint3 p(Model::CKB, shrink * x / nrm, shrink * y / nrm, shrink * zc / nrm);
    for (Model m : {Model::CKBP, Model::PH}) {
      const HPoint3 there = convert(p, m);
      const HPoint3 back = convert(there, Model::CKB);
      worst_rt = std::max({worst_rt, std::abs(back.x - p.x), std::abs(back.y - p.y),
                           std::abs(back.z - p.z)});
    }
    const HPoint3 q(Model::CKB, -shrink * y / nrm, shrink * zc / nrm, shrink * x / nrm);
    const double d0 = distance3(p, q).value();
    for (Model m : {Model::CKBP, Model::PH}) {
      const double dm = distance3(convert(p, m), convert(q, m)).value();
      worst_dist = std::max(worst_dist, std::abs(dm - d0) / std::max(1.0, d0));
    }
    const Cplx l(4 * rng.uniform(i, 24) - 2, 4 * rng.uniform(i, 25) - 2);
    const HPoint3 bp = iota(l, Model::CKB);
    worst_iota = std::max(worst_iota,
                          std::abs(bp.x * bp.x + bp.y * bp.y + bp.z * bp.z - 1.0));
    const double s = 2 * rng.uniform(i, 26) - 1;
    const double d_one = std::atanh(std::abs(s));
    const double d_half = 0.5 * safe_acosh((1 + s * s) / (1 - s * s));
    worst_branch = std::max(worst_branch, std::abs(d_one - d_half));
  }
  rec.add("models-roundtrip", worst_rt, 1e-12);
  rec.add("models-distance-agreement", worst_dist, 1e-10);
  rec.add("models-iota-boundary", worst_iota, 1e-12);
  rec.add("models-distance-branches", worst_branch, 1e-10);

  // Appendix-style projection equivalences on random symmetric matrices.
  double worst_proj = 0, worst_det = 0;
  for (std::size_t i = 0; i < std::max<std::size_t>(n, 100); ++i) {
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
      for (int cix = r; cix < 4; ++cix) {
        m(r, cix) = rng.gaussian(i, 28 + 4 * r + cix);
        m(cix, r) = m(r, cix);
      }
    if (std::abs(m(3, 3)) < 1e-6 || std::abs(m.determinant()) < 1e-8) continue;
    const Eigen::MatrixXd elim = project_quadratic(m, 3, ProjectionMethod::Eliminate);
    const Eigen::MatrixXd dsc = project_quadratic(m, 3, ProjectionMethod::Discriminant);
    const Eigen::MatrixXd iri =
        project_quadratic(m, 3, ProjectionMethod::InverseRestrictInverse);
    worst_proj = std::max({worst_proj, (iri - elim).norm() / std::max(1.0, elim.norm()),
                           (dsc + 4.0 * m(3, 3) * elim).norm() /
                               std::max(1.0, 4 * std::abs(m(3, 3)) * elim.norm())});
    worst_det = std::max(worst_det, std::abs(elim.determinant() * m(3, 3) - m.determinant()) /
                                        std::max(1.0, std::abs(m.determinant())));
  }
  rec.add("appendix-projection-agree", worst_proj, 1e-8);
  rec.add("appendix-projection-det", worst_det, 1e-9);

  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace shellrange
