#include "gmono/two_mode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "gmono/errors.hpp"
#include "gmono/scalar.hpp"

namespace gmono {

namespace {

constexpr int kScanPoints = 720;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Cached coefficients of the minimization curve
//   m(theta) = 1 + (xi_m + sqrt_eta cos)^2 / (base + cc cos + sc sin).
struct Curve {
  double xi_m;
  double sqrt_eta;
  double base;
  double cc;
  double sc;
};

Curve make_curve(const StandardForm& sf, SinTermRadicand conv) {
  const XiEtaZeta x = xi_eta_zeta(sf);  // rejects separable input
  double eta = x.eta;
  if (eta < 0.0) {
    if (eta < -kDefaultTol)
      throw numeric_error("m_theta: eta = " + std::to_string(eta) +
                          " negative beyond tolerance");
    eta = 0.0;
  }
  const double sqrt_eta = std::sqrt(eta);
  if (sqrt_eta <= 0.0)
    throw numeric_error(
        "m_theta: eta degenerate; the curve is undefined on the pure-state "
        "boundary");

  const double ab = sf.a * sf.b;
  const double abm = ab - sf.c_minus * sf.c_minus;
  const double sigma =
      sf.a * sf.a + sf.b * sf.b + 2.0 * sf.c_plus * sf.c_minus;
  const double ratio2 = (conv == SinTermRadicand::XiOverEtaSquared)
                            ? x.xi_plus * x.xi_plus / (eta * eta)
                            : x.xi_plus * x.xi_plus / eta;
  // eta - xi_+^2 is proportional to the physicality slack, which vanishes
  // identically on every two-mode reduction of a three-mode pure state.
  // There the radicand is roundoff noise around an exact zero, and its
  // square root would inject sqrt(eps)-sized jitter into the sin
  // coefficient. Snapping the noise window to zero restores the exact
  // value; genuine radicands sit orders of magnitude above it.
  double radicand = clamp01(1.0 - ratio2);
  if (radicand <= 1e-12) radicand = 0.0;
  // The 2(ab - c_-^2) factor scales the whole bracket, cos and sin terms
  // included; only then does the curve's minimum agree with the direct
  // constrained minimization over pure states below gamma.
  Curve c;
  c.xi_m = x.xi_minus;
  c.sqrt_eta = sqrt_eta;
  c.base = 2.0 * abm * sigma;
  c.cc = -2.0 * abm * x.zeta / sqrt_eta;
  c.sc = 2.0 * abm * (sf.a * sf.a - sf.b * sf.b) * std::sqrt(radicand);
  return c;
}

double eval_curve(const Curve& c, double cos_th, double sin_th) {
  const double h1 = c.xi_m + c.sqrt_eta * cos_th;
  const double h2 = c.base + c.cc * cos_th + c.sc * sin_th;
  if (!(h2 > 0.0))
    throw numeric_error("m_theta: h2 = " + std::to_string(h2) +
                        " is not positive");
  return 1.0 + h1 * h1 / h2;
}

double eval_curve(const Curve& c, double theta) {
  return eval_curve(c, std::cos(theta), std::sin(theta));
}

struct ScanTable {
  std::array<double, kScanPoints> theta, cos_th, sin_th;
};

const ScanTable& scan_table() {
  static const ScanTable table = [] {
    ScanTable t;
    for (int i = 0; i < kScanPoints; ++i) {
      t.theta[i] = (2.0 * M_PI) * (static_cast<double>(i) / kScanPoints);
      t.cos_th[i] = std::cos(t.theta[i]);
      t.sin_th[i] = std::sin(t.theta[i]);
    }
    return t;
  }();
  return table;
}

ThetaMin minimize_curve(const Curve& c, double rel_tol) {
  const ScanTable& grid = scan_table();
  std::array<double, kScanPoints> val;
  for (int i = 0; i < kScanPoints; ++i)
    val[i] = eval_curve(c, grid.cos_th[i], grid.sin_th[i]);

  const double step = 2.0 * M_PI / kScanPoints;
  const double width_goal = rel_tol * 2.0 * M_PI;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

  // Golden-section on the bracket around one grid point. Endpoints may
  // leave [0, 2pi); the curve is periodic so evaluation is unaffected.
  const auto polish = [&](int center) {
    double lo = grid.theta[center] - step;
    double hi = grid.theta[center] + step;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = eval_curve(c, x1);
    double f2 = eval_curve(c, x2);
    while (hi - lo > width_goal) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = eval_curve(c, x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = eval_curve(c, x2);
      }
    }
    double theta = 0.5 * (lo + hi);
    double m = eval_curve(c, theta);
    if (val[center] < m) {
      theta = grid.theta[center];
      m = val[center];
    }
    return ThetaMin{theta, m};
  };

  // The curve can host several wells whose depths differ by less than the
  // scan resolution, so the scan's argmin is not a reliable basin choice.
  // Polish every local minimum of the scan and keep the lowest.
  ThetaMin out{0.0, std::numeric_limits<double>::infinity()};
  for (int i = 0; i < kScanPoints; ++i) {
    const double prev = val[(i + kScanPoints - 1) % kScanPoints];
    const double next = val[(i + 1) % kScanPoints];
    if (val[i] > prev || val[i] > next) continue;
    const ThetaMin cand = polish(i);
    if (cand.m_star < out.m_star) out = cand;
  }
  out.theta_star = std::fmod(out.theta_star + 2.0 * M_PI, 2.0 * M_PI);
  return out;
}

// Pure within tolerance: det gamma = 1, equivalently xi_plus = 0.
bool pure_reduced(const StandardForm& sf) {
  const double ab = sf.a * sf.b;
  const double abm = ab - sf.c_minus * sf.c_minus;
  const double det = (ab - sf.c_plus * sf.c_plus) * abm;
  const double xi_p = sf.c_plus * abm + sf.c_minus;
  return std::abs(det - 1.0) <= kDefaultTol || xi_p <= kDefaultTol;
}

IneqCheck check_slack(double slack) { return {slack >= -kDefaultTol, slack}; }

}  // namespace

StandardForm standard_form(const Eigen::MatrixXd& cm4) {
  if (cm4.rows() != 4 || cm4.cols() != 4)
    throw invalid_input("standard_form: 4x4 covariance matrix required");
  if (!is_valid_cm(cm4))
    throw invalid_input(
        "standard_form: not a physical two-mode covariance matrix");

  const double i1 = cm4.block<2, 2>(0, 0).determinant();
  const double i2 = cm4.block<2, 2>(2, 2).determinant();
  const double i3 = cm4.block<2, 2>(0, 2).determinant();
  const double i4 = cm4.determinant();

  const double a = std::sqrt(std::max(i1, 1.0));
  const double b = std::sqrt(std::max(i2, 1.0));

  // c_plus^2, c_minus^2 are the roots of x^2 - s x + p with
  // s = (I1 I2 + I3^2 - I4)/(ab), p = I3^2.
  const double s = (i1 * i2 + i3 * i3 - i4) / (a * b);
  const double p = i3 * i3;
  double disc = s * s - 4.0 * p;
  if (disc < -1e-8 * std::max(1.0, s * s))
    throw numeric_error(
        "standard_form: inconsistent invariants (negative root "
        "discriminant)");
  disc = std::max(disc, 0.0);
  // Near a double root (c_+^2 = c_-^2, which includes every pure state) the
  // split picks up the square root of the determinant noise, orders of
  // magnitude above the inputs' accuracy. Below the noise floor the two
  // roots are numerically indistinguishable; the symmetric split is exact.
  if (disc <= 1e-12 * s * s) disc = 0.0;
  double u = 0.5 * (s + std::sqrt(disc));
  if (u < 0.0) u = 0.0;
  const double v = u > 0.0 ? p / u : 0.0;  // stable small root

  StandardForm sf;
  sf.a = a;
  sf.b = b;
  sf.c_plus = std::sqrt(u);
  sf.c_minus = (i3 > 0.0 ? 1.0 : (i3 < 0.0 ? -1.0 : 0.0)) * std::sqrt(v);
  return sf;
}

bool check_physical(const StandardForm& sf, double tol) {
  const double ab = sf.a * sf.b;
  const double mp = ab - sf.c_plus * sf.c_plus;
  const double mm = ab - sf.c_minus * sf.c_minus;
  if (sf.a < 1.0 - tol || sf.b < 1.0 - tol) return false;
  if (mp < 1.0 - tol || mm < 1.0 - tol) return false;
  const double det = mp * mm;
  const double rhs =
      sf.a * sf.a + sf.b * sf.b + 2.0 * sf.c_plus * sf.c_minus;
  return det + 1.0 >= rhs - tol;
}

bool is_entangled(const StandardForm& sf, double tol) {
  if (!check_physical(sf, tol))
    throw invalid_input("is_entangled: unphysical standard form");
  if (sf.c_minus >= 0.0) return false;
  const double ab = sf.a * sf.b;
  const double det = (ab - sf.c_plus * sf.c_plus) *
                     (ab - sf.c_minus * sf.c_minus);
  const double margin = sf.a * sf.a + sf.b * sf.b -
                        2.0 * sf.c_plus * sf.c_minus - (det + 1.0);
  // States within tol of the separability boundary count as separable; the
  // minimization machinery degenerates there.
  return margin > tol;
}

XiEtaZeta xi_eta_zeta(const StandardForm& sf) {
  if (!is_entangled(sf))
    throw invalid_input(
        "xi_eta_zeta: separable input; the invariants apply to entangled "
        "states only");
  const double a = sf.a, b = sf.b, cp = sf.c_plus, cm = sf.c_minus;
  const double ab = a * b;
  const double abm = ab - cm * cm;
  const double a2b2 = a * a + b * b;
  XiEtaZeta x;
  x.xi_plus = cp * abm + cm;
  x.xi_minus = cp * abm - cm;
  x.eta = (a - b * abm) * (b - a * abm);
  x.zeta = 2.0 * ab * cm * cm * cm + a2b2 * cp * cm * cm +
           (a2b2 - 2.0 * ab * ab) * cm - ab * (a2b2 - 2.0) * cp;
  return x;
}

double m_theta(const StandardForm& sf, double theta, SinTermRadicand conv) {
  return eval_curve(make_curve(sf, conv), theta);
}

ThetaMin min_m(const StandardForm& sf, double rel_tol, SinTermRadicand conv) {
  return minimize_curve(make_curve(sf, conv), rel_tol);
}

double mixed_tangle(const StandardForm& sf) {
  if (!check_physical(sf))
    throw invalid_input("mixed_tangle: unphysical standard form");
  if (!is_entangled(sf)) return 0.0;
  if (pure_reduced(sf))
    return tangle_of_invariant(std::max(4.0 * sf.a * sf.a - 4.0, 0.0));
  const double m_star = min_m(sf).m_star;
  return tangle_of_invariant(std::max(4.0 * m_star - 4.0, 0.0));
}

TangleBoundReport bound_report(const StandardForm& sf) {
  if (!is_entangled(sf))
    throw invalid_input("bound_report: separable input");
  const XiEtaZeta x = xi_eta_zeta(sf);
  const double cp = sf.c_plus, cm = sf.c_minus;
  const double abm = sf.a * sf.b - cm * cm;
  const double sigma = sf.a * sf.a + sf.b * sf.b + 2.0 * cp * cm;
  const double eta = std::max(x.eta, 0.0);
  const double sqrt_eta = std::sqrt(eta);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  TangleBoundReport r;
  r.invariants = x;
  r.delta = -4.0 * cp * cm;
  r.zeta1 = x.xi_minus - sqrt_eta;
  r.pure_branch = pure_reduced(sf);
  r.tau = mixed_tangle(sf);
  r.bound_delta = tangle_of_invariant(std::max(r.delta, 0.0));

  r.zeta1_positive = check_slack(r.zeta1);
  r.zeta1_le_minus_two_cminus = check_slack(-2.0 * cm - r.zeta1);
  r.minus_two_cminus_le_sqrt_delta =
      check_slack(2.0 * std::sqrt(std::max(-cp * cm, 0.0)) + 2.0 * cm);

  if (r.pure_branch) {
    // xi_plus ~ 0: zeta/sqrt(eta) and zeta/xi_plus are 0/0. The roof is
    // attained by the state itself, so the zeta bound collapses onto tau.
    r.zeta2 = nan;
    r.zeta2_prime = nan;
    r.bound_zeta = r.tau;
    r.zeta2_ge_zeta2_prime = {true, nan};
    r.zeta2_prime_ge_four = {true, nan};
    r.ratio_le_quarter_delta = {true, nan};
    return r;
  }

  r.zeta2 = 2.0 * abm * (sigma + x.zeta / sqrt_eta);
  if (!(r.zeta2 > 0.0))
    throw numeric_error("bound_report: zeta2 = " + std::to_string(r.zeta2) +
                        " is not positive");
  // Lower bound on zeta2 from sqrt(eta) >= xi_plus (zeta < 0, so replacing
  // sqrt(eta) by xi_plus in the denominator can only decrease the bracket).
  r.zeta2_prime = 2.0 * abm * (sigma + x.zeta / x.xi_plus);
  const double ratio = r.zeta1 * r.zeta1 / r.zeta2;
  r.bound_zeta = tangle_of_invariant(std::max(4.0 * ratio, 0.0));
  r.zeta2_ge_zeta2_prime = check_slack(r.zeta2 - r.zeta2_prime);
  r.zeta2_prime_ge_four = check_slack(r.zeta2_prime - 4.0);
  r.ratio_le_quarter_delta = check_slack(-cp * cm - ratio);
  return r;
}

}  // namespace gmono
