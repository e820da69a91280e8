#include "urkit/quantum.hpp"

#include <cmath>
#include <string>

#include "urkit/json_io.hpp"

namespace urkit {

namespace {

Matrix gaussian_matrix(Rng& rng, int dim) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = rng.complex_gaussian();
    }
  }
  return g;
}

}  // namespace

DensityState DensityState::from_matrix(const Matrix& rho, double herm_tol) {
  if (rho.rows() != rho.cols()) {
    throw InvalidState("density matrix must be square, got " +
                       std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
  }
  if (!all_finite(rho)) {
    throw InvalidState("density matrix has non-finite entries");
  }
  const double herm_err = hermiticity_error(rho);
  if (herm_err > herm_tol) {
    throw InvalidState("density matrix violates the hermitian invariant (relative deviation " +
                       std::to_string(herm_err) + ")");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
    throw InvalidState("density matrix violates the unit-trace invariant (trace = " +
                       std::to_string(tr.real()) + (tr.imag() < 0 ? "-" : "+") +
                       std::to_string(std::abs(tr.imag())) + "i)");
  }
  const EigenSystem es = hermitian_eigensystem(rho, herm_tol);
  if (es.values(0) < -1e-10) {
    throw InvalidState("density matrix violates the eigenvalue invariant (min eigenvalue = " +
                       std::to_string(es.values(0)) + ")");
  }
  const double threshold = tol::rank * std::max(1.0, es.values(es.values.size() - 1));
  int rank = 0;
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (es.values(i) > threshold) ++rank;
  }
  DensityState state;
  state.rho = rho;
  state.dim = static_cast<int>(rho.rows());
  state.rank = rank;
  state.pure = (rank == 1);
  return state;
}

Operator Operator::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSquare("operator must be square, got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
  if (!all_finite(m)) {
    throw InvalidState("operator has non-finite entries");
  }
  Operator op;
  op.m = m;
  op.hermitian = hermiticity_error(m) <= tol::hermitian;
  return op;
}

DensityState pure_state(const Vector& amplitudes) {
  if (amplitudes.size() < 2) {
    throw ZeroVector("pure_state needs at least 2 amplitudes");
  }
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !amplitudes.allFinite()) {
    throw ZeroVector("pure_state amplitudes have zero norm");
  }
  const Vector psi = amplitudes / norm;
  return DensityState::from_matrix(psi * psi.adjoint());
}

SpinOperators spin_operators(int two_j) {
  if (two_j < 1) {
    throw InvalidSpin("two_j must be >= 1, got " + std::to_string(two_j));
  }
  const int d = two_j + 1;
  const double j = 0.5 * two_j;
  Matrix jz = Matrix::Zero(d, d);
  Matrix jplus = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = j - i;  // basis ordered m = j .. -j
    jz(i, i) = m;
    if (i > 0) {
      // <m+1|J+|m> with m the column's quantum number.
      jplus(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
  }
  const Matrix jminus = jplus.adjoint();
  SpinOperators ops;
  ops.jx = Operator::from_matrix(0.5 * (jplus + jminus));
  ops.jy = Operator::from_matrix(Complex(0, -0.5) * (jplus - jminus));
  ops.jz = Operator::from_matrix(jz);
  return ops;
}

LadderOperators ladder_operators() {
  Matrix plus = Matrix::Zero(2, 2);
  plus(0, 1) = 1.0;
  return LadderOperators{Operator::from_matrix(plus),
                         Operator::from_matrix(plus.adjoint())};
}

Operator boson_annihilator(int cutoff) {
  if (cutoff < 2) {
    throw InvalidCutoff("boson cutoff must be >= 2, got " + std::to_string(cutoff));
  }
  Matrix a = Matrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return Operator::from_matrix(a);
}

Operator tensor_product(const Operator& a, const Operator& b) {
  const Eigen::Index ra = a.m.rows(), ca = a.m.cols();
  const Eigen::Index rb = b.m.rows(), cb = b.m.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index k = 0; k < ca; ++k) {
      out.block(i * rb, k * cb, rb, cb) = a.m(i, k) * b.m;
    }
  }
  return Operator::from_matrix(out);
}

std::variant<DensityState, Operator> sample(const RandomSpec& spec) {
  if (spec.dim < 2) {
    throw InvalidSpec("sample dimension must be >= 2, got " + std::to_string(spec.dim));
  }
  Rng rng(spec.seed);
  switch (spec.ensemble) {
    case Ensemble::haar_pure: {
      Vector psi(spec.dim);
      for (int i = 0; i < spec.dim; ++i) psi(i) = rng.complex_gaussian();
      return pure_state(psi);
    }
    case Ensemble::hs_mixed: {
      const Matrix g = gaussian_matrix(rng, spec.dim);
      const Matrix gg = g * g.adjoint();
      return DensityState::from_matrix(gg / gg.trace().real());
    }
    case Ensemble::ginibre_operator:
      return Operator::from_matrix(gaussian_matrix(rng, spec.dim));
    case Ensemble::hermitian_gue: {
      const Matrix g = gaussian_matrix(rng, spec.dim);
      return Operator::from_matrix(0.5 * (g + g.adjoint()));
    }
  }
  throw InvalidSpec("unknown ensemble");
}

DensityState sample_state(const RandomSpec& spec) {
  auto v = sample(spec);
  if (auto* state = std::get_if<DensityState>(&v)) return *state;
  throw InvalidSpec("ensemble does not produce states");
}

Operator sample_operator(const RandomSpec& spec) {
  auto v = sample(spec);
  if (auto* op = std::get_if<Operator>(&v)) return *op;
  throw InvalidSpec("ensemble does not produce operators");
}

std::vector<Operator> matrix_unit_basis(int d) {
  std::vector<Operator> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1.0;
      basis.push_back(Operator::from_matrix(e));
    }
  }
  return basis;
}

DensityState load_state(const std::string& path) {
  return DensityState::from_matrix(load_matrix(path));
}

}  // namespace urkit
