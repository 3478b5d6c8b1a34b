#include "gmono/state.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gmono/errors.hpp"

namespace gmono {

namespace {

void require_mode(const GaussianState& state, int mode, const char* who) {
  if (mode < 0 || mode >= state.n())
    throw invalid_input(std::string(who) + ": mode index " +
                        std::to_string(mode) + " out of range for n = " +
                        std::to_string(state.n()));
}

}  // namespace

GaussianState random_pure_state(int n, double squeeze_max,
                                std::uint64_t seed) {
  const Eigen::MatrixXd s = random_symplectic(n, squeeze_max, seed);
  GaussianState state;
  state.cm = s * s.transpose();
  state.displacement = Eigen::VectorXd::Zero(2 * n);
  return state;
}

bool is_pure(const GaussianState& state, double tol) {
  const int n = state.n();
  const Eigen::MatrixXd j = symplectic_form(n);
  const Eigen::MatrixXd jg = j * state.cm;
  const Eigen::MatrixXd residual =
      -jg * jg - Eigen::MatrixXd::Identity(2 * n, 2 * n);
  return residual.cwiseAbs().maxCoeff() <= tol;
}

GaussianState partial_transpose(const GaussianState& state,
                                const std::vector<int>& transposed_modes) {
  for (int m : transposed_modes) require_mode(state, m, "partial_transpose");
  GaussianState out = state;
  // F gamma F with F = diag(.., 1, -1, ..): negate the momentum row and
  // column of each transposed mode. Exact sign flips, so an involution.
  for (int m : transposed_modes) {
    const int p = 2 * m + 1;
    out.cm.row(p) *= -1.0;
    out.cm.col(p) *= -1.0;
    out.displacement(p) *= -1.0;
  }
  return out;
}

GaussianState reduce(const GaussianState& state,
                     const std::vector<int>& kept_modes) {
  if (kept_modes.empty()) throw invalid_input("reduce: empty mode list");
  std::set<int> seen;
  for (int m : kept_modes) {
    require_mode(state, m, "reduce");
    if (!seen.insert(m).second)
      throw invalid_input("reduce: duplicate mode index " +
                          std::to_string(m));
  }
  const int k = static_cast<int>(kept_modes.size());
  GaussianState out;
  out.cm.resize(2 * k, 2 * k);
  out.displacement.resize(2 * k);
  for (int i = 0; i < k; ++i) {
    out.displacement(2 * i) = state.displacement(2 * kept_modes[i]);
    out.displacement(2 * i + 1) = state.displacement(2 * kept_modes[i] + 1);
    for (int j = 0; j < k; ++j)
      out.cm.block<2, 2>(2 * i, 2 * j) =
          state.cm.block<2, 2>(2 * kept_modes[i], 2 * kept_modes[j]);
  }
  return out;
}

TwoModeBlocks two_mode_blocks(const GaussianState& state, int pivot,
                              int partner) {
  require_mode(state, pivot, "two_mode_blocks");
  require_mode(state, partner, "two_mode_blocks");
  if (pivot == partner)
    throw invalid_input("two_mode_blocks: pivot and partner must differ");
  TwoModeBlocks blocks;
  blocks.alpha = state.cm.block<2, 2>(2 * pivot, 2 * pivot);
  blocks.beta = state.cm.block<2, 2>(2 * partner, 2 * partner);
  blocks.delta = state.cm.block<2, 2>(2 * pivot, 2 * partner);
  return blocks;
}

double delta_invariant(const GaussianState& state, int pivot, int partner) {
  return -4.0 * two_mode_blocks(state, pivot, partner).delta.determinant();
}

double purity_identity_residual(const GaussianState& state, int pivot) {
  require_mode(state, pivot, "purity_identity_residual");
  if (!is_pure(state, 1e-8))
    throw invalid_input(
        "purity_identity_residual: state is not pure; the block identity "
        "does not apply");
  const Eigen::Matrix2d alpha = state.cm.block<2, 2>(2 * pivot, 2 * pivot);
  double sum = alpha.determinant();
  for (int l = 0; l < state.n(); ++l) {
    if (l == pivot) continue;
    sum += state.cm.block<2, 2>(2 * pivot, 2 * l).determinant();
  }
  return std::abs(sum - 1.0);
}

}  // namespace gmono
