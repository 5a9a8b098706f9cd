#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "shellrange/invariants.hpp"
#include "shellrange/models.hpp"

namespace shellrange {

enum class Role4 { Shell, ShellDual, Base, BaseDual, Spec, SpecDual, Bas };
enum class Role3 { W, WDual, CR, CRDual, CRBase, CRBaseDual };

std::string to_string(Role4 r);
std::string to_string(Role3 r);

/// Symmetric 4x4 quadric of the hyperbolic space, tagged with its model and
/// role. `degenerate` marks the limit quadrics of normal matrices.
struct Quadric4 {
  Model model = Model::CKBP;
  Role4 role = Role4::Shell;
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  bool degenerate = false;

  double operator()(const HPoint3& p) const;
};

/// Symmetric 3x3 quadric: either in the complex plane (numerical range
/// roles, model tag unused) or in the hyperbolic plane (conformal range).
struct Quadric3 {
  Model model = Model::CKBP;
  Role3 role = Role3::W;
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  bool degenerate = false;

  double operator()(const HPoint2& p) const;
  double operator()(Cplx z) const;  // (Re z, Im z, 1) contraction
};

/// Congruence transport CKBP -> CKB for primal quadrics: T^t Q T with
/// the column substitution (x, y, 1+z, 1-z).
Eigen::Matrix4d transport4();
Eigen::Matrix3d transport2();

/// Moves a quadric between CKBP and CKB (primal roles by T-congruence,
/// dual roles by the inverse congruence).
Quadric4 to_model(const Quadric4& q, Model target);
Quadric3 to_model(const Quadric3& q, Model target);

/// Base quadrics of the asymptotic boundary and their duals.
Eigen::Matrix4d base_q4(Model model);
Eigen::Matrix4d base_g4(Model model);
Eigen::Matrix3d base_q3(Model model);
Eigen::Matrix3d base_g3(Model model);

Eigen::Matrix3d adjugate3(const Eigen::Matrix3d& m);
Eigen::Matrix4d adjugate4(const Eigen::Matrix4d& m);

/// Real parts of the eigenvalues, ascending. Throws if a genuinely complex
/// eigenvalue shows up beyond tol * scale.
std::vector<double> real_eigenvalues(const Eigen::MatrixXd& m, double tol = 1e-6);

/// Numerical rank by singular values against threshold.
int rank_of(const Eigen::MatrixXd& m, double threshold);

namespace detail {

/// Raw shell quadric of the CKBP model (fixed (3,3) entry 1) and its dual
/// (fixed (4,4) entry 1), both straight from the five data.
Eigen::Matrix4d shell_q_ckbp(const FiveData& f);
Eigen::Matrix4d shell_g_ckbp(const FiveData& f);
/// Spectral parts: shell_q = 2 U base" + spec, shell_g = U base' + spec.
Eigen::Matrix4d shell_q_spec_ckbp(const FiveData& f);
Eigen::Matrix4d shell_g_spec_ckbp(const FiveData& f);

/// Conformal range quadric in the reduced five data and its dual.
Eigen::Matrix3d cr_q_ckbp(const ReducedFiveData& r);
Eigen::Matrix3d cr_g_ckbp(const ReducedFiveData& r);

}  // namespace detail

}  // namespace shellrange
