#pragma once

#include <Eigen/Dense>

#include "gmono/symplectic.hpp"

namespace gmono {

/// Standard form of a two-mode covariance matrix: the four local-symplectic
/// invariants (a, b, c_plus, c_minus) with alpha = diag(a,a),
/// beta = diag(b,b), delta = diag(c_plus, c_minus) and c_plus >= |c_minus|.
struct StandardForm {
  double a;
  double b;
  double c_plus;
  double c_minus;
};

/// The invariant combinations driving the convex-roof minimization:
///   xi_pm = c_plus (ab - c_minus^2) +/- c_minus
///   eta   = [a - b(ab - c_minus^2)][b - a(ab - c_minus^2)]
///   zeta  = 2ab c_minus^3 + (a^2+b^2) c_plus c_minus^2
///           + [a^2+b^2-2a^2b^2] c_minus - ab(a^2+b^2-2) c_plus
struct XiEtaZeta {
  double xi_plus;
  double xi_minus;
  double eta;
  double zeta;
};

/// One inequality of the bound-chain derivation: whether it holds within
/// tolerance, plus its slack (>= 0 when satisfied exactly).
struct IneqCheck {
  bool holds;
  double slack;
};

/// Per-pair bound-chain report. For entangled mixed reductions,
/// tau <= bound_zeta <= bound_delta within tolerance, and all six
/// inequality checks hold. pure_branch marks reduced states that are pure
/// within tolerance (xi_plus ~ 0); there the zeta2-based quantities are
/// degenerate (0/0) and reported as NaN with their checks vacuously true.
struct TangleBoundReport {
  double delta;        // -4 c_plus c_minus
  double tau;          // mixed-state tangle
  double bound_zeta;   // tangle_of_invariant(4 zeta1^2 / zeta2)
  double bound_delta;  // tangle_of_invariant(delta)
  double zeta1;        // h1(pi) = xi_minus - sqrt(eta)
  double zeta2;        // h2(pi) = 2(ab-c_-^2)(a^2+b^2+2c_+c_- + zeta/sqrt(eta))
  double zeta2_prime;  // 2(ab-c_-^2)(a^2+b^2+2c_+c_- + zeta/xi_plus)
  bool pure_branch;
  XiEtaZeta invariants;
  IneqCheck zeta1_positive;              // zeta1 > 0
  IneqCheck zeta1_le_minus_two_cminus;   // zeta1 <= -2 c_minus
  IneqCheck minus_two_cminus_le_sqrt_delta;  // -2 c_minus <= 2 sqrt(-c_+c_-)
  IneqCheck zeta2_ge_zeta2_prime;        // zeta2 >= zeta2'
  IneqCheck zeta2_prime_ge_four;         // zeta2' >= 4
  IneqCheck ratio_le_quarter_delta;      // zeta1^2/zeta2 <= -c_+c_-
};

/// Radicand of the sin-term factor in the minimization curve:
/// 1 - xi_plus^2/eta (default; the reading consistent with xi_plus^2 <= eta
/// and the one matching constrained-minimization ground truth) or
/// 1 - xi_plus^2/eta^2. Only the sin term differs between the two; it
/// vanishes at theta = pi, so the bound chain is unaffected by the choice.
enum class SinTermRadicand { XiOverEta, XiOverEtaSquared };

/// Extract (a, b, c_plus, c_minus) from a physical two-mode covariance
/// matrix through its local symplectic invariants I1 = det alpha,
/// I2 = det beta, I3 = det delta, I4 = det gamma: a = sqrt(I1),
/// b = sqrt(I2), and c_plus^2 >= c_minus^2 the roots of
///   u + v = (I1 I2 + I3^2 - I4)/sqrt(I1 I2),  u v = I3^2,
/// with c_minus carrying the sign of I3 (c_minus = 0 when I3 = 0).
StandardForm standard_form(const Eigen::MatrixXd& cm4);

/// Physicality in standard-form parameters:
///   a >= 1, b >= 1, ab - c_pm^2 >= 1, and
///   (ab - c_+^2)(ab - c_-^2) + 1 >= a^2 + b^2 + 2 c_+ c_-.
bool check_physical(const StandardForm& sf, double tol = kDefaultTol);

/// Inseparability test:
///   (ab - c_+^2)(ab - c_-^2) + 1 < a^2 + b^2 - 2 c_+ c_-,
/// with values within tol of equality reported as separable. Entanglement
/// requires c_minus < 0. Throws invalid_input on unphysical input.
bool is_entangled(const StandardForm& sf, double tol = kDefaultTol);

/// The xi/eta/zeta invariants of an entangled standard form.
XiEtaZeta xi_eta_zeta(const StandardForm& sf);

/// The minimization curve m(theta) = 1 + h1(theta)^2 / h2(theta), where
///   h1 = xi_minus + sqrt(eta) cos(theta)
///   h2 = 2(ab - c_-^2) [ a^2 + b^2 + 2 c_+ c_- - (zeta/sqrt(eta)) cos(theta)
///        + (a^2 - b^2) sqrt(radicand) sin(theta) ]
/// and the radicand is clamped to [0, 1]. m(theta) is the determinant of
/// the pivot block of a candidate optimal pure covariance matrix below the
/// state; its minimum over theta reproduces the constrained minimization
/// over all pure states under the state in the semidefinite order.
/// Throws numeric_error when h2 <= 0 or eta degenerates.
double m_theta(const StandardForm& sf, double theta,
               SinTermRadicand conv = SinTermRadicand::XiOverEta);

struct ThetaMin {
  double theta_star;
  double m_star;
};

/// Global minimum of m over [0, 2pi): 720-point scan, then golden-section
/// refinement of the best bracket to relative tolerance rel_tol.
ThetaMin min_m(const StandardForm& sf, double rel_tol = 1e-10,
               SinTermRadicand conv = SinTermRadicand::XiOverEta);

/// Gaussian tangle of a physical two-mode state in standard form:
/// 0 when separable; the pure-state formula tangle_of_invariant(4a^2 - 4)
/// when the state is pure within tolerance (det gamma = 1 or xi_plus ~ 0);
/// otherwise tangle_of_invariant(4 m_star - 4) from min_m.
double mixed_tangle(const StandardForm& sf);

/// Full bound-chain evaluation of an entangled standard form; see
/// TangleBoundReport. Throws invalid_input on separable input.
TangleBoundReport bound_report(const StandardForm& sf);

}  // namespace gmono
