#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace gmono {

/// Default numerical tolerance wherever one is not user-supplied.
inline constexpr double kDefaultTol = 1e-9;

/// The 2n x 2n symplectic form in mode-ordered (q1,p1,...,qn,pn) layout:
/// the direct sum of n copies of [[0,1],[-1,0]]. Throws invalid_input for
/// n < 1.
Eigen::MatrixXd symplectic_form(int n);

/// True iff max|S J S^T - J| <= tol. S must be square with even dimension.
bool is_symplectic(const Eigen::MatrixXd& s, double tol = kDefaultTol);

/// Physicality of a covariance matrix: gamma symmetric within tol and the
/// Hermitian matrix gamma + iJ positive semidefinite (minimum eigenvalue
/// >= -tol). Vacuum is normalized to the identity, so this is equivalent to
/// every symplectic eigenvalue being >= 1 - tol.
bool is_valid_cm(const Eigen::MatrixXd& gamma, double tol = kDefaultTol);

/// Symplectic spectrum of a symmetric positive definite matrix: the moduli
/// of the eigenvalues of i*J*gamma, which come in +/- pairs; each modulus is
/// returned once, sorted ascending. Evaluated through the Cholesky factor
/// (eigenvalues of the Hermitian matrix i L^T J L), which is equivalent by
/// similarity.
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& gamma);

/// Seeded random symplectic matrix S = K1 Z K2 with K1, K2 Haar
/// orthogonal-symplectic and Z = diag(e^{r1}, e^{-r1}, ...), each r_j
/// uniform in [0, squeeze_max]. Satisfies S J S^T = J to ~1e-10.
Eigen::MatrixXd random_symplectic(int n, double squeeze_max,
                                  std::uint64_t seed);

}  // namespace gmono
