#include "gmono/random.hpp"

#include <cmath>
#include <complex>

#include "gmono/errors.hpp"

namespace gmono {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted into (0, 1] so the log is finite.
  const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * M_PI * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Eigen::MatrixXcd random_unitary(int n, Rng& rng) {
  if (n < 1) throw invalid_input("random_unitary: n must be >= 1");
  Eigen::MatrixXcd ginibre(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ginibre(i, j) = std::complex<double>(rng.normal(), rng.normal()) * M_SQRT1_2;

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  // Fix the phase of each column so the distribution is exactly Haar.
  const Eigen::MatrixXcd& qrmat = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> rjj = qrmat(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

Eigen::MatrixXd orthogonal_symplectic(const Eigen::MatrixXcd& u) {
  const int n = static_cast<int>(u.rows());
  if (u.cols() != n || n < 1)
    throw invalid_input("orthogonal_symplectic: square unitary required");
  // U = X + iY maps to [[X, Y], [-Y, X]] on (q1..qn, p1..pn); interleave to
  // the (q1,p1,...,qn,pn) layout used everywhere else.
  Eigen::MatrixXd s(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double x = u(j, k).real();
      const double y = u(j, k).imag();
      s(2 * j, 2 * k) = x;
      s(2 * j, 2 * k + 1) = y;
      s(2 * j + 1, 2 * k) = -y;
      s(2 * j + 1, 2 * k + 1) = x;
    }
  }
  return s;
}

}  // namespace gmono
