#pragma once

// Shared fixtures for the test suite: closed-form covariance matrices,
// local symplectic factories, and small numeric utilities. Everything here
// is independent of the library's own construction paths so tests cross
// check rather than echo.

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "gmono/state.hpp"

namespace testutil {

// Two-mode squeezed vacuum with squeezing parameter r:
//   diag blocks cosh(2r) I, off block sinh(2r) diag(1, -1).
inline Eigen::Matrix4d tmsv_cm(double r) {
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Eigen::Matrix4d g;
  g << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return g;
}

// The symplectic two-mode squeezer S(r): S(r) S(r)^T = tmsv_cm(r), since
// cosh^2 + sinh^2 = cosh(2r) and 2 cosh sinh = sinh(2r).
inline Eigen::Matrix4d two_mode_squeezer(double r) {
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  Eigen::Matrix4d s;
  s << ch, 0, sh, 0,
       0, ch, 0, -sh,
       sh, 0, ch, 0,
       0, -sh, 0, ch;
  return s;
}

// Single-mode phase rotation (a symplectic orthogonal 2x2).
inline Eigen::Matrix2d rotation(double t) {
  Eigen::Matrix2d r;
  r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return r;
}

// Single-mode squeezer diag(e^z, e^-z).
inline Eigen::Matrix2d squeezer(double z) {
  Eigen::Matrix2d s;
  s << std::exp(z), 0, 0, std::exp(-z);
  return s;
}

// Euler decomposition of an arbitrary single-mode symplectic.
inline Eigen::Matrix2d local_symplectic(double phi, double z, double psi) {
  return rotation(phi) * squeezer(z) * rotation(psi);
}

// Direct sum of n 2x2 blocks.
inline Eigen::MatrixXd block_diag(const std::vector<Eigen::Matrix2d>& blocks) {
  const int n = static_cast<int>(blocks.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) out.block<2, 2>(2 * k, 2 * k) = blocks[k];
  return out;
}

// A random mixed-but-entangled two-mode standard form harvested from a
// reduction of a random pure (pivot + partner + extra modes) state. Returns
// the reduced covariance matrix; extra_modes >= 1 makes it genuinely mixed.
inline Eigen::Matrix4d random_reduced_cm(int extra_modes, double squeeze_max,
                                         std::uint64_t seed) {
  const gmono::GaussianState st =
      gmono::random_pure_state(2 + extra_modes, squeeze_max, seed);
  return gmono::reduce(st, {0, 1}).cm;
}

inline double rel_diff(double x, double y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

}  // namespace testutil
