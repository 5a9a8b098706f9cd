#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shellrange/mat2.hpp"

namespace shellrange {

struct CheckResult {
  std::string name;
  double residual = 0;
  double tol = 0;
  bool pass = true;
};

/// Runs every per-matrix identity of the library on A and returns one
/// result per identity (checks that do not apply to A's class are skipped).
std::vector<CheckResult> verify_matrix(const Mat2C& a);

/// Fuzz driver: n random matrices (iid standard complex Gaussian entries),
/// plus Moebius covariance pairs and model-level checks. Results carry the
/// worst residual seen per identity.
std::vector<CheckResult> verify_fuzz(std::size_t n, std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& results);

/// Random matrix with iid standard complex Gaussian entries.
Mat2C random_gaussian_matrix(std::uint64_t seed, std::uint64_t index);

/// Haar-ish random unitary from seeded angles.
Mat2C random_unitary(std::uint64_t seed, std::uint64_t index);

}  // namespace shellrange
