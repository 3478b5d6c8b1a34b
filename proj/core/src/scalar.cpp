#include "gmono/scalar.hpp"

#include <cmath>
#include <string>

#include "gmono/errors.hpp"

namespace gmono {

namespace {

void require_nonnegative(double t, const char* who) {
  if (!(t >= 0.0))
    throw invalid_input(std::string(who) + ": argument must be >= 0, got " +
                        std::to_string(t));
}

}  // namespace

double sqrt_gap(double t) {
  require_nonnegative(t, "sqrt_gap");
  return 4.0 / (std::sqrt(t + 4.0) + std::sqrt(t));
}

double inv_sqrt_gap(double t) {
  require_nonnegative(t, "inv_sqrt_gap");
  return (std::sqrt(t + 4.0) + std::sqrt(t)) / 4.0;
}

double tangle_of_invariant(double t) {
  require_nonnegative(t, "tangle_of_invariant");
  const double x = inv_sqrt_gap(t) - 0.5;
  return x * x;
}

double negativity_from_pt_spectrum(const std::vector<double>& nu_tilde) {
  double prod = 1.0;
  for (double nu : nu_tilde) {
    if (!(nu > 0.0))
      throw invalid_input(
          "negativity_from_pt_spectrum: spectrum values must be positive");
    if (nu < 1.0) prod /= nu;
  }
  return (prod - 1.0) / 2.0;
}

double pure_tangle(const GaussianState& state, int pivot) {
  if (pivot < 0 || pivot >= state.n())
    throw invalid_input("pure_tangle: pivot out of range");
  if (!is_pure(state, 1e-8))
    throw invalid_input("pure_tangle: state is not pure");

  double det_alpha =
      state.cm.block<2, 2>(2 * pivot, 2 * pivot).determinant();
  // Near-product states straddle 1 by roundoff; the square root is not
  // differentiable there, so the whole kDefaultTol window collapses to
  // exactly 1 and the tangle to exactly 0.
  if (det_alpha < 1.0 + kDefaultTol) {
    if (det_alpha < 1.0 - kDefaultTol)
      throw numeric_error("pure_tangle: reduced determinant " +
                          std::to_string(det_alpha) +
                          " below 1; inconsistent state");
    det_alpha = 1.0;
  }
  // nu = sqrt(det a) - sqrt(det a - 1); 1/nu evaluated as the conjugate sum
  // so large determinants do not cancel.
  const double inv_nu = std::sqrt(det_alpha) + std::sqrt(det_alpha - 1.0);
  const double x = (inv_nu - 1.0) / 2.0;
  return x * x;
}

}  // namespace gmono
