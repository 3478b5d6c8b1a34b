#pragma once

#include <vector>

#include "gmono/state.hpp"

namespace gmono {

/// The square-root gap sqrt(t+4) - sqrt(t), t >= 0. Strictly decreasing
/// from 2 at t = 0; equals twice the smallest partial-transpose symplectic
/// eigenvalue of a pure two-mode state whose correlation invariant is t.
/// Evaluated as 4/(sqrt(t+4)+sqrt(t)) so large t does not cancel.
double sqrt_gap(double t);

/// Reciprocal of sqrt_gap, evaluated cancellation-free as
/// (sqrt(t+4)+sqrt(t))/4.
double inv_sqrt_gap(double t);

/// Tangle of a pure two-mode state as a function of its correlation
/// invariant t: (inv_sqrt_gap(t) - 1/2)^2. Zero at t = 0, strictly
/// increasing, star-shaped and superadditive.
double tangle_of_invariant(double t);

/// Negativity from a partially transposed symplectic spectrum:
/// (prod_{nu < 1} nu^{-1} - 1) / 2, zero when no value lies below 1.
/// All spectrum values must be positive.
double negativity_from_pt_spectrum(const std::vector<double>& nu_tilde);

/// Tangle of a pure state across the pivot : rest split, computed from the
/// determinant of the reduced pivot-mode covariance matrix:
/// tau = (nu^{-1} - 1)^2 / 4 with nu = sqrt(det a) - sqrt(det a - 1).
/// det(alpha) within [1 - 1e-9, 1] is treated as exactly 1 (zero tangle);
/// det(alpha) below that window throws numeric_error, mixed input throws
/// invalid_input.
double pure_tangle(const GaussianState& state, int pivot);

}  // namespace gmono
