#include "gmono/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gmono/errors.hpp"
#include "gmono/random.hpp"

namespace gmono {

namespace {

void require_even_square(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0)
    throw invalid_input(std::string(who) +
                        ": square matrix of even dimension required");
  if (!m.allFinite())
    throw invalid_input(std::string(who) + ": non-finite entries");
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n) {
  if (n < 1) throw invalid_input("symplectic_form: n must be >= 1");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    j(2 * k, 2 * k + 1) = 1.0;
    j(2 * k + 1, 2 * k) = -1.0;
  }
  return j;
}

bool is_symplectic(const Eigen::MatrixXd& s, double tol) {
  require_even_square(s, "is_symplectic");
  const int n = static_cast<int>(s.rows()) / 2;
  const Eigen::MatrixXd j = symplectic_form(n);
  return ((s * j * s.transpose() - j).cwiseAbs().maxCoeff()) <= tol;
}

bool is_valid_cm(const Eigen::MatrixXd& gamma, double tol) {
  require_even_square(gamma, "is_valid_cm");
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  const int n = static_cast<int>(gamma.rows()) / 2;
  Eigen::MatrixXcd h = gamma.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 1.0) * symplectic_form(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& gamma) {
  require_even_square(gamma, "symplectic_spectrum");
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > kDefaultTol)
    throw invalid_input("symplectic_spectrum: matrix is not symmetric");
  const int dim = static_cast<int>(gamma.rows());
  const int n = dim / 2;

  Eigen::LLT<Eigen::MatrixXd> llt(gamma);
  if (llt.info() != Eigen::Success)
    throw invalid_input(
        "symplectic_spectrum: matrix is not positive definite");
  const Eigen::MatrixXd l = llt.matrixL();

  // i L^T J L is Hermitian and similar to i J gamma; its eigenvalues are
  // the +/- pairs of symplectic eigenvalues.
  const Eigen::MatrixXd a = l.transpose() * symplectic_form(n) * l;
  const Eigen::MatrixXcd ia = std::complex<double>(0.0, 1.0) * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ia,
                                                     Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending, symmetric in 0

  std::vector<double> spectrum(n);
  for (int k = 0; k < n; ++k) spectrum[k] = ev(n + k);
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

Eigen::MatrixXd random_symplectic(int n, double squeeze_max,
                                  std::uint64_t seed) {
  if (n < 1) throw invalid_input("random_symplectic: n must be >= 1");
  if (squeeze_max < 0.0)
    throw invalid_input("random_symplectic: squeeze_max must be >= 0");

  Rng rng(seed);
  const Eigen::MatrixXd k1 = orthogonal_symplectic(random_unitary(n, rng));
  Eigen::VectorXd z(2 * n);
  for (int j = 0; j < n; ++j) {
    const double r = rng.uniform(0.0, squeeze_max);
    z(2 * j) = std::exp(r);
    z(2 * j + 1) = std::exp(-r);
  }
  const Eigen::MatrixXd k2 = orthogonal_symplectic(random_unitary(n, rng));
  return k1 * z.asDiagonal() * k2;
}

}  // namespace gmono
