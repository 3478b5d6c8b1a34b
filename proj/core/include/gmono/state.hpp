#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gmono/symplectic.hpp"

namespace gmono {

/// An n-mode Gaussian state: covariance matrix (2n x 2n, mode-ordered
/// q1,p1,...,qn,pn, vacuum = identity) plus displacement vector. The
/// displacement is carried through every operation but ignored by all
/// entanglement quantities.
///
/// Plain aggregate: physicality is enforced at the construction and file
/// boundaries, not by the type, because partial transposition legitimately
/// produces non-physical covariance matrices.
struct GaussianState {
  Eigen::MatrixXd cm;
  Eigen::VectorXd displacement;

  int n() const { return static_cast<int>(cm.rows()) / 2; }
};

/// The two-mode reduction [[alpha, delta], [delta^T, beta]]: alpha is the
/// pivot-mode block, beta the partner-mode block, delta the cross block.
struct TwoModeBlocks {
  Eigen::Matrix2d alpha;
  Eigen::Matrix2d beta;
  Eigen::Matrix2d delta;
};

/// Random pure state: cm = S S^T with S = random_symplectic(n, squeeze_max,
/// seed), zero displacement.
GaussianState random_pure_state(int n, double squeeze_max, std::uint64_t seed);

/// Purity test: max|-J cm J cm - 1| <= tol, equivalent to all symplectic
/// eigenvalues equal to 1 within tol.
bool is_pure(const GaussianState& state, double tol = kDefaultTol);

/// Partial transposition of the listed modes: cm -> F cm F where F flips
/// the sign of each transposed mode's momentum row and column (the
/// displacement's momentum entries flip as well). Exact involution. The
/// result need not be a physical covariance matrix.
GaussianState partial_transpose(const GaussianState& state,
                                const std::vector<int>& transposed_modes);

/// Partial trace down to the listed modes, in the listed order: the
/// principal submatrix on those modes' rows/columns plus the matching
/// displacement entries. Duplicates and empty lists are rejected.
GaussianState reduce(const GaussianState& state,
                     const std::vector<int>& kept_modes);

/// Blocks of the reduced covariance matrix on (pivot, partner), pivot first.
TwoModeBlocks two_mode_blocks(const GaussianState& state, int pivot,
                              int partner);

/// The cross-correlation invariant Delta = -4 det(delta) for the
/// (pivot, partner) pair; positive iff det(delta) < 0.
double delta_invariant(const GaussianState& state, int pivot, int partner);

/// |det(alpha) + sum_{l != pivot} det(delta_l) - 1| for a pure state; a
/// test hook for the pure-state block identity, <= ~1e-8 when pure.
/// Throws invalid_input on mixed input, where the identity has no meaning.
double purity_identity_residual(const GaussianState& state, int pivot);

}  // namespace gmono
