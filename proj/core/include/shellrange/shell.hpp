#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "shellrange/mobius.hpp"
#include "shellrange/quadrics.hpp"

namespace shellrange {

enum class ShellKind { PointCase, LineCase, Horosphere, Tube };
std::string to_string(ShellKind k);

/// Classified geometry of the shell: tube radius, asymptotic points
/// (eigenvalues) and center.
struct ShellGeometry {
  ShellKind kind = ShellKind::PointCase;
  std::vector<Cplx> asymptotic_points;
  XReal radius;
  HPoint3 center;
};

/// Primal shell quadric. For normal matrices the formula degenerates to the
/// axis / double-plane member; the quadric is then flagged degenerate.
Quadric4 shell_Q(const Mat2C& a, Model model = Model::CKBP);
/// Dual (tangential) shell quadric; its (4,4) entry is 1 in CKBP.
Quadric4 shell_G(const Mat2C& a, Model model = Model::CKBP);

/// Singular members of the pencil spanned by the base form and the spectral
/// part: the axis of the tube and the tangent biplanar pair.
std::pair<Quadric4, Quadric4> shell_pencil_members(const Mat2C& a, Model model = Model::CKBP);

/// Eigenvalues of base_g * Q(A) (that is 2(U -+ |D|), each twice) and of
/// G(A) * base_q (that is -(U -+ |D|)/2, each twice), both ascending.
std::pair<std::vector<double>, std::vector<double>> shell_eigen_ratios(const Mat2C& a);

HPoint3 shell_center(const Mat2C& a);

ShellGeometry shell_geometry(const Mat2C& a);

/// Hyperbolic distance from p to the axis of the shell tube; +inf in the
/// parabolic case.
XReal shell_axis_distance(const Mat2C& a, const HPoint3& p);

/// Signed hyperbolic distance from p to the shell surface, negative inside.
XReal shell_signed_distance(const Mat2C& a, const HPoint3& p);

/// The three scalar position characteristics of the shell: signed distance
/// from the central point O, from the horosphere z_PH = 1, and the norm
/// distance -log ||A||.
struct ShellDistances {
  double dis_origin = 0;
  double dis_horo = 0;
  XReal dis_norm;
};
ShellDistances shell_characteristic_distances(const Mat2C& a);

/// Affine matrix carrying the projectivized unit sphere onto the shell;
/// det = ((U^2 - |D|^2))/2 and S J S^t = -G with J = diag(1,1,1,-1).
Eigen::Matrix4d shell_sample_matrix(const Mat2C& a);

/// Core 2x2 block of the numerical-range quadric and its dual.
Eigen::Matrix2d shell_core_Q(const Mat2C& a);
Eigen::Matrix2d shell_core_G(const Mat2C& a);

/// Block decomposition  Q_model = W^t blockdiag(core, 1, -(U^2-|D|^2)) W and
/// its dual counterpart.
struct ShellBlocks {
  Eigen::Matrix4d q_blocks;  // blockdiag(Q core, 1, -(U^2 - |D|^2))
  Eigen::Matrix4d g_blocks;  // blockdiag(G core, -(U^2 - |D|^2), 1)
  Eigen::Matrix4d q_witness; // Q_CKBP = q_witness^t * q_blocks * q_witness
  Eigen::Matrix4d g_witness; // G_CKBP = g_witness^t * g_blocks * g_witness
};
ShellBlocks shell_block_decomposition(const Mat2C& a);

/// Similarity witness S with base_g Q(A) = S (-4 G(A) base_q) S^{-1}.
Eigen::Matrix4d shell_similarity_witness(const Mat2C& a);

/// Reads the five data back from a CKBP shell quadric with (3,3) entry 1.
FiveData five_data_from_shell(const Quadric4& q);

/// Intersections of the vertical line through the center with the shell:
/// z = tr(A*A)/2 -+ sqrt(U^2 - |D|^2).
std::pair<double, double> shell_vertical_diameter(const Mat2C& a);

}  // namespace shellrange
