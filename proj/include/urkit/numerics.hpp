#pragma once

// Dense complex-matrix substrate: products, adjoints, traces, Hermitian
// eigensystems and tolerance-aware rank. All matrices are
// Eigen::MatrixXcd; every function validates its inputs and throws a typed
// error instead of asserting.

#include <complex>

#include <Eigen/Dense>

#include "urkit/errors.hpp"

namespace urkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Hermiticity tolerance, relative Frobenius.
inline constexpr double hermitian = 1e-10;
// Rank threshold relative to the largest eigenvalue.
inline constexpr double rank = 1e-9;
// Relative residual accepted for the unified-equality identity.
inline constexpr double equality = 1e-9;
// Second-order origin moments at or below this count as zero.
inline constexpr double degenerate = 1e-12;
// Imaginary part allowed to leak into real-valued returns.
inline constexpr double imag_leak = 1e-10;
// Orthogonality of psi_perp to the support of rho.
inline constexpr double support_orthogonal = 1e-8;
// Gram-Schmidt drop threshold, relative to the largest basis norm.
inline constexpr double gs_drop = 1e-10;
}  // namespace tol

// Default tolerance on BoundReport slack; UR_KIT_TOL overrides (read once).
double default_satisfied_tol();

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns are the matching orthonormal eigenvectors
};

bool all_finite(const Matrix& m);

// ||m - m^dag||_F / max(1, ||m||_F); NotSquare on non-square input.
double hermiticity_error(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = tol::hermitian);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& m);
Complex trace(const Matrix& m);

EigenSystem hermitian_eigensystem(const Matrix& h, double tol = tol::hermitian);

// Number of eigenvalues above tol * max(1, largest eigenvalue). The input
// must be Hermitian (PSD up to round-off in every intended use).
int rank_with_tolerance(const Matrix& g, double tol = tol::rank);

}  // namespace urkit
