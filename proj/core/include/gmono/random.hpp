#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace gmono {

/// Deterministic random source. The seed is always an explicit argument of
/// the public sampling functions; no ambient state. Identical seeds give
/// identical draws on a given platform.
///
/// Uniform doubles are built from the top 53 bits of the mt19937_64 output
/// and normals by Box-Muller, so the stream does not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal.
  double normal();

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random n x n unitary (QR of a complex Ginibre matrix with the phase
/// correction that makes the distribution exactly Haar).
Eigen::MatrixXcd random_unitary(int n, Rng& rng);

/// Real 2n x 2n representation of an n x n unitary, in mode-ordered
/// (q1,p1,...,qn,pn) layout. The result is both orthogonal and symplectic.
Eigen::MatrixXd orthogonal_symplectic(const Eigen::MatrixXcd& u);

}  // namespace gmono
