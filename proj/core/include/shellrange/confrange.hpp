#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shellrange/quadrics.hpp"

namespace shellrange {

enum class CRKind {
  AsymptoticPoint,
  HPointCase,
  HSegment,
  HLineDouble,
  HCircleDisk,
  HEllipseDisk,
  HalfLine,
  EllipticParabolaDisk,
  DistanceBand,
  Horodisk,
};
std::string to_string(CRKind k);

/// Classified shape of the conformal range with its metric data. Semi-axis
/// lengths follow the canonical-representative conventions: they are the
/// artanh of the characteristic CKB values.
struct CRShape {
  CRKind kind = CRKind::AsymptoticPoint;
  std::vector<CRKind> borderline;  // alternative labels within tolerance
  std::vector<HPoint2> eigenpoints;
  XReal major_semi;
  XReal minor_semi;
  std::pair<double, double> characteristic_ckb{0.0, 0.0};
};

/// Real-Moebius invariants: U1..U3 are the elementary symmetric functions
/// of 2(U-|D|), 2(U+|D|), 2(U-|D|+2E); C1 = U2/U1^2 and C2 = U3/U1^3 are
/// scale-free (undefined for real scalar matrices).
struct CRInvariants {
  double u1 = 0, u2 = 0, u3 = 0;
  std::optional<double> c1, c2;
};

Quadric3 confrange_Q(const Mat2C& a, Model model = Model::CKBP);
Quadric3 confrange_G(const Mat2C& a, Model model = Model::CKBP);

/// Eigenvalues of G^R * base_q (that is -(U-|D|)/2, -(U+|D|)/2,
/// -(U-|D|+2E)/2) and of base_g * Q^R (their pairwise products times 4),
/// both ascending.
std::pair<std::vector<double>, std::vector<double>> cr_eigen_ratios(const Mat2C& a);

CRInvariants cr_invariants(const Mat2C& a);

/// The two Euclidean semi-axes of the congruence-normalized range in the
/// CKB disk, largest first. Real scalar matrices yield (0, 0).
std::pair<double, double> characteristic_ckb_values(const Mat2C& a);

CRShape cr_shape(const Mat2C& a);

/// h-eigenpoints iota2(l1), iota2(l2) and the eigendistance between them
/// (asymptotic eigenpoints give +inf).
struct EigenpointData {
  HPoint2 p1, p2;
  XReal distance;
};
EigenpointData eigenpoints_and_distance(const Mat2C& a, Model model = Model::CKBP);

/// Both sides of the bifocal identity for ranges with no real eigenvalue:
/// (cosh(f1+f2) - cosh m+)(cosh m+ - cosh(f1-f2)) against the normalized
/// quadric quotient.
std::pair<double, double> bifocal_check(const Mat2C& a, const HPoint2& p);

/// Both sides of the focus/directrix identity for semi-real matrices.
std::pair<double, double> parabola_check(const Mat2C& a, const HPoint2& p);

/// Distance-band identity (real-hyperbolic) or horodisk identity
/// (real-parabolic), depending on the class of A.
std::pair<double, double> band_horo_check(const Mat2C& a, const HPoint2& p);

/// Vertex of the parabola-shaped range of a semi-real matrix: intersection
/// of the symmetry axis with the boundary nearest the interior focus.
HPoint2 cr_vertex(const Mat2C& a);

/// Signed distance of the range from the central point, from the horocycle
/// z_PH = 1, and the norm distance; defined for real-type matrices.
struct CROrientedDistances {
  double dis_origin = 0;
  double dis_horo = 0;
  XReal dis_norm;
};
CROrientedDistances cr_oriented_distances(const Mat2C& a);

/// One reconstructed representative with the same reduced five data.
struct CRCandidate {
  TriangularForm form;
  SpectralClass cls;
};

/// Inverse problem: all canonical triangular representatives whose
/// conformal range has the given boundary quadric (role CR, rank 3) or dual
/// quadric (role CRDual). The multiplicity is 1, 2, 3 or 4 by spectral
/// class. An optional class hint filters the output.
std::vector<CRCandidate> cr_reconstruct(const Quadric3& m,
                                        std::optional<SpectralClass> shape_hint = {});

}  // namespace shellrange
