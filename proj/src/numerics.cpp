#include "urkit/numerics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace urkit {

double default_satisfied_tol() {
  static const double cached = [] {
    if (const char* env = std::getenv("UR_KIT_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0) return v;
    }
    return 1e-9;
  }();
  return cached;
}

bool all_finite(const Matrix& m) {
  return m.allFinite();
}

double hermiticity_error(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("hermiticity check requires a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).norm() / scale;
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_error(m) <= tol;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: inner dimensions " +
                            std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + " differ");
  }
  return a * b;
}

Matrix adjoint(const Matrix& m) {
  return m.adjoint();
}

Complex trace(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("trace requires a square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return m.trace();
}

EigenSystem hermitian_eigensystem(const Matrix& h, double tol) {
  const double err = hermiticity_error(h);
  if (err > tol) {
    throw NotHermitian("hermitian_eigensystem: relative deviation " +
                       std::to_string(err) + " exceeds tolerance");
  }
  // Symmetrize so round-off in the input cannot bias the solve.
  const Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalInconsistency("hermitian eigensolver failed to converge");
  }
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

int rank_with_tolerance(const Matrix& g, double tol) {
  const EigenSystem es = hermitian_eigensystem(g);
  const double largest = es.values.size() > 0 ? es.values(es.values.size() - 1) : 0.0;
  const double threshold = tol * std::max(1.0, largest);
  int rank = 0;
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (es.values(i) > threshold) ++rank;
  }
  return rank;
}

}  // namespace urkit
