#include "urkit/gram.hpp"

#include <algorithm>
#include <cmath>

#include "urkit/json_io.hpp"
#include "urkit/random.hpp"

namespace urkit {

namespace {

// Tr(rho a^dag b) on raw matrices; the engine-internal fast path.
Complex form_m(const Matrix& rho, const Matrix& a, const Matrix& b) {
  return (rho * a.adjoint() * b).trace();
}

std::vector<Matrix> checked_matrices(const DensityState& rho,
                                     const std::vector<Operator>& observables,
                                     const char* who) {
  if (observables.empty()) {
    throw EmptyBasis(std::string(who) + ": observable list is empty");
  }
  std::vector<Matrix> out;
  out.reserve(observables.size());
  for (const Operator& op : observables) {
    if (op.m.rows() != rho.dim || op.m.cols() != rho.dim) {
      throw DimensionMismatch(std::string(who) + ": observable dimension " +
                              std::to_string(op.m.rows()) + " does not match state dimension " +
                              std::to_string(rho.dim));
    }
    const Complex mean = (rho.rho * op.m).trace();
    out.push_back(op.m - mean * Matrix::Identity(rho.dim, rho.dim));
  }
  return out;
}

std::string describe_state(const DensityState& rho) {
  return "dim=" + std::to_string(rho.dim) + " rank=" + std::to_string(rho.rank) +
         (rho.pure ? " pure" : " mixed");
}

}  // namespace

GramMatrix gram_matrix(const DensityState& rho, const std::vector<Operator>& observables) {
  const std::vector<Matrix> checked_obs = checked_matrices(rho, observables, "gram_matrix");
  const int n = static_cast<int>(checked_obs.size());
  Matrix d(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = m; k < n; ++k) {
      const Complex value = form_m(rho.rho, checked_obs[m], checked_obs[k]);
      d(m, k) = value;
      d(k, m) = std::conj(value);
    }
  }
  const EigenSystem es = hermitian_eigensystem(d);
  const double scale = std::max(1.0, es.values(n - 1));
  if (es.values(0) < -1e-10 * scale) {
    throw NumericalInconsistency("gram_matrix: D is not PSD, min eigenvalue " +
                                 std::to_string(es.values(0)));
  }
  GramMatrix result;
  result.d = std::move(d);
  result.checked_observables.reserve(checked_obs.size());
  for (const Matrix& m : checked_obs) {
    result.checked_observables.push_back(Operator::from_matrix(m));
  }
  result.state_ref = describe_state(rho);
  return result;
}

Matrix v_matrix(const DensityState& rho, const std::vector<Operator>& observables,
                const Operator& o, double degen_tol) {
  const std::vector<Matrix> checked_obs = checked_matrices(rho, observables, "v_matrix");
  if (o.m.rows() != rho.dim || o.m.cols() != rho.dim) {
    throw DimensionMismatch("v_matrix: information operator dimension mismatch");
  }
  const double norm_o = form_m(rho.rho, o.m, o.m).real();
  if (norm_o <= degen_tol) {
    throw DegenerateInformationOperator("v_matrix: <O^dag O> = " + std::to_string(norm_o));
  }
  const int n = static_cast<int>(checked_obs.size());
  Vector w(n);  // w_m = <A_check_m^dag O>
  for (int m = 0; m < n; ++m) {
    w(m) = form_m(rho.rho, checked_obs[m], o.m);
  }
  // V(m,n) = w_m conj(w_n) / <O^dag O> = <A_m^dag O><O^dag A_n>/<O^dag O>.
  return (w * w.adjoint()) / norm_o;
}

PsdOrder psd_order_check(const Matrix& d, const Matrix& v, double tol) {
  if (d.rows() != v.rows() || d.cols() != v.cols()) {
    throw DimensionMismatch("psd_order_check: shapes differ");
  }
  const double err_d = hermiticity_error(d);
  const double err_v = hermiticity_error(v);
  if (err_d > tol || err_v > tol) {
    throw NotHermitian("psd_order_check: inputs deviate from Hermitian by " +
                       std::to_string(std::max(err_d, err_v)));
  }
  const EigenSystem diff = hermitian_eigensystem(d - v, std::max(tol, tol::hermitian));
  const EigenSystem base = hermitian_eigensystem(d, std::max(tol, tol::hermitian));
  const double scale = std::max(std::abs(base.values(0)),
                                std::abs(base.values(base.values.size() - 1)));
  PsdOrder result;
  result.min_eigenvalue = diff.values(0);
  result.holds = result.min_eigenvalue >= -tol * std::max(1.0, scale);
  return result;
}

OrthoOperatorSet schmidt_orthogonalize(const DensityState& rho,
                                       const std::vector<Operator>& basis,
                                       double drop_threshold) {
  if (basis.empty()) {
    throw EmptyBasis("schmidt_orthogonalize: basis is empty");
  }
  const int nb = static_cast<int>(basis.size());
  for (const Operator& op : basis) {
    if (op.m.rows() != rho.dim || op.m.cols() != rho.dim) {
      throw DimensionMismatch("schmidt_orthogonalize: basis dimension mismatch");
    }
  }

  double max_basis_norm = 0.0;
  for (const Operator& op : basis) {
    max_basis_norm = std::max(max_basis_norm, form_m(rho.rho, op.m, op.m).real());
  }
  const double drop_at = drop_threshold * max_basis_norm;

  std::vector<Matrix> kept;
  std::vector<double> norms;
  for (const Operator& op : basis) {
    Matrix candidate = op.m;
    bool needs_second_pass = false;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const Complex coeff = form_m(rho.rho, kept[j], candidate) / norms[j];
      if (std::abs(coeff) > 10.0) needs_second_pass = true;
      candidate -= coeff * kept[j];
    }
    if (needs_second_pass) {
      // Large projection coefficients mean heavy cancellation; one more
      // full pass restores orthogonality to round-off.
      for (std::size_t j = 0; j < kept.size(); ++j) {
        const Complex coeff = form_m(rho.rho, kept[j], candidate) / norms[j];
        candidate -= coeff * kept[j];
      }
    }
    const double norm = form_m(rho.rho, candidate, candidate).real();
    if (norm > drop_at) {
      kept.push_back(std::move(candidate));
      norms.push_back(norm);
    }
  }

  // r must equal the rank of the metric matrix G(i,j) = <V_i^dag V_j>.
  Matrix metric(nb, nb);
  for (int i = 0; i < nb; ++i) {
    for (int j = i; j < nb; ++j) {
      const Complex value = form_m(rho.rho, basis[i].m, basis[j].m);
      metric(i, j) = value;
      metric(j, i) = std::conj(value);
    }
  }
  const int metric_rank = rank_with_tolerance(metric);
  if (metric_rank != static_cast<int>(kept.size())) {
    throw NumericalInconsistency("schmidt_orthogonalize: retained " +
                                 std::to_string(kept.size()) + " operators but the metric matrix has rank " +
                                 std::to_string(metric_rank));
  }

  OrthoOperatorSet theta;
  theta.r = static_cast<int>(kept.size());
  theta.norms = std::move(norms);
  theta.drop_threshold = drop_threshold;
  theta.source = "basis of " + std::to_string(nb) + " operators, " + describe_state(rho);
  theta.operators.reserve(kept.size());
  for (Matrix& m : kept) {
    theta.operators.push_back(Operator::from_matrix(std::move(m)));
  }
  for (int i = 0; i < theta.r; ++i) {
    for (int j = i + 1; j < theta.r; ++j) {
      const double overlap = std::abs(form_m(rho.rho, theta.operators[i].m, theta.operators[j].m));
      if (overlap > 1e-9 * std::sqrt(theta.norms[i] * theta.norms[j])) {
        throw NumericalInconsistency("schmidt_orthogonalize: residual overlap " +
                                     std::to_string(overlap) + " between elements " +
                                     std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  return theta;
}

GramDecomposition uncertainty_equality(const DensityState& rho,
                                       const std::vector<Operator>& observables,
                                       const OrthoOperatorSet& theta) {
  GramDecomposition decomposition;
  decomposition.d = gram_matrix(rho, observables).d;
  Matrix sum = Matrix::Zero(decomposition.d.rows(), decomposition.d.cols());
  decomposition.v.reserve(theta.operators.size());
  for (const Operator& o : theta.operators) {
    Matrix vk = v_matrix(rho, observables, o);
    sum += vk;
    decomposition.v.push_back(std::move(vk));
  }
  decomposition.closure_residual = (decomposition.d - sum).norm();
  return decomposition;
}

namespace {

struct PhaseObjective {
  // rhs(X) = lhs - Re(X^dag P X) with P = D - sum_{j<=k} V_j (PSD), which
  // is algebraically identical to the projection-minus-cross-terms形式.
  Matrix p;
  double lhs = 0.0;

  double rhs_at(const std::vector<double>& phases) const {
    const int n = static_cast<int>(phases.size());
    Vector x(n);
    for (int m = 0; m < n; ++m) x(m) = std::polar(1.0, phases[m]);
    const Complex quad = x.dot(p * x);
    return lhs - quad.real();
  }
};

}  // namespace

BoundReport lbk_bound(const DensityState& rho, const std::vector<Operator>& observables,
                      const OrthoOperatorSet& theta, int k,
                      const std::optional<std::vector<double>>& phases, int restarts,
                      double tol) {
  if (k < 0 || k > theta.r) {
    throw IndexOutOfRange("lbk_bound: k = " + std::to_string(k) + " outside [0, " +
                          std::to_string(theta.r) + "]");
  }
  const int n = static_cast<int>(observables.size());
  if (phases && static_cast<int>(phases->size()) != n) {
    throw InvalidParameters("lbk_bound: expected " + std::to_string(n) + " phases, got " +
                            std::to_string(phases->size()));
  }

  PhaseObjective objective;
  const Matrix d = gram_matrix(rho, observables).d;
  Matrix m_sum = Matrix::Zero(n, n);
  for (int j = 0; j < k; ++j) {
    m_sum += v_matrix(rho, observables, theta.operators[j]);
  }
  objective.p = d - m_sum;
  objective.lhs = d.trace().real();

  std::vector<double> best_phases(n, 0.0);
  double best_rhs = 0.0;
  if (phases) {
    best_phases = *phases;
    best_rhs = objective.rhs_at(best_phases);
  } else {
    // Coordinate ascent; each coordinate restriction is c + 2 Re(e^{i
    // theta} z), maximized exactly at theta = -arg(z). theta_1 stays pinned
    // to 0 (global phase is irrelevant).
    Rng rng(0x1b5af1d0u ^ (static_cast<std::uint64_t>(k) << 32) ^ static_cast<std::uint64_t>(n));
    best_rhs = -std::numeric_limits<double>::infinity();
    const int total_restarts = std::max(1, restarts);
    for (int restart = 0; restart < total_restarts; ++restart) {
      std::vector<double> current(n, 0.0);
      if (restart > 0) {
        for (int m = 1; m < n; ++m) current[m] = rng.uniform(0.0, 2.0 * std::numbers::pi);
      }
      Vector x(n);
      for (int m = 0; m < n; ++m) x(m) = std::polar(1.0, current[m]);
      double value = objective.rhs_at(current);
      for (int sweep = 0; sweep < 512; ++sweep) {
        for (int m = 1; m < n; ++m) {
          Complex z = 0.0;
          for (int q = 0; q < n; ++q) {
            if (q != m) z += objective.p(m, q) * x(q);
          }
          // Minimizing 2 Re(conj(x_m) z) over |x_m| = 1.
          if (std::abs(z) > 0.0) {
            x(m) = -z / std::abs(z);
            current[m] = std::arg(x(m));
          }
        }
        const double updated = objective.rhs_at(current);
        if (updated - value < 1e-12) {
          value = std::max(value, updated);
          break;
        }
        value = updated;
      }
      if (value > best_rhs) {
        best_rhs = value;
        best_phases = current;
      }
    }
  }

  BoundReport report;
  report.lhs = objective.lhs;
  report.rhs = best_rhs;
  report.slack = report.lhs - report.rhs;
  report.tol = tol;
  report.satisfied = report.slack >= -tol;
  report.components["k"] = static_cast<double>(k);
  for (int m = 0; m < n; ++m) {
    report.components["theta_" + std::to_string(m + 1)] = best_phases[m];
  }
  report.labels["phases"] = phases ? "explicit" : "optimized";
  return report;
}

nlohmann::json ortho_set_to_json(const OrthoOperatorSet& theta) {
  nlohmann::json ops = nlohmann::json::array();
  for (const Operator& op : theta.operators) ops.push_back(matrix_to_json(op.m));
  return nlohmann::json{{"operators", ops},
                        {"norms", theta.norms},
                        {"r", theta.r},
                        {"source", theta.source},
                        {"drop_threshold", theta.drop_threshold}};
}

nlohmann::json decomposition_to_json(const GramDecomposition& decomposition) {
  nlohmann::json vs = nlohmann::json::array();
  for (const Matrix& v : decomposition.v) vs.push_back(matrix_to_json(v));
  return nlohmann::json{{"d_matrix", matrix_to_json(decomposition.d)},
                        {"v_matrices", vs},
                        {"closure_residual", decomposition.closure_residual}};
}

}  // namespace urkit
