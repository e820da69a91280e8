#pragma once

// Matrix-level structure of the framework: the Gram matrix D of checked
// observables under the state-weighted form, information matrices V, PSD
// ordering checks, Gram-Schmidt orthogonalization of operator sets under
// the form, and the closure D = sum_k V_k.

#include <optional>
#include <vector>

#include <json.hpp>

#include "urkit/bounds.hpp"

namespace urkit {

struct GramMatrix {
  Matrix d;                                 // N x N, Hermitian PSD
  std::vector<Operator> checked_observables;
  std::string state_ref;                    // short description of rho
};

struct OrthoOperatorSet {
  std::vector<Operator> operators;  // pairwise form-orthogonal, nonzero norm
  std::vector<double> norms;        // <O_k^dag O_k>
  int r = 0;                        // rank of the basis metric matrix
  std::string source;
  double drop_threshold = tol::gs_drop;
};

struct GramDecomposition {
  Matrix d;
  std::vector<Matrix> v;    // rank <= 1 PSD contributions, one per O_k
  double closure_residual;  // ||D - sum V_k||_F
};

// D(m,n) = <A_check_m^dag A_check_n>; observables are mean-subtracted
// internally. Hermiticity and positive semidefiniteness are validated.
GramMatrix gram_matrix(const DensityState& rho, const std::vector<Operator>& observables);

// V(m,n) = <A_check_m^dag O><O^dag A_check_n> / <O^dag O>, a rank <= 1 PSD
// matrix.
Matrix v_matrix(const DensityState& rho, const std::vector<Operator>& observables,
                const Operator& o, double degen_tol = tol::degenerate);

struct PsdOrder {
  bool holds = false;
  double min_eigenvalue = 0.0;  // of d - v
};

// Whether d - v is positive semidefinite: min eigenvalue of d - v must be
// >= -tol * max(1, max |eigenvalue of d|).
PsdOrder psd_order_check(const Matrix& d, const Matrix& v, double tol);

// Sequential Gram-Schmidt under form(rho, ., .), dropping candidates whose
// residual norm falls below drop_threshold relative to the largest basis
// norm. The retained count r must match the rank of the basis metric
// matrix; a mismatch raises NumericalInconsistency.
OrthoOperatorSet schmidt_orthogonalize(const DensityState& rho,
                                       const std::vector<Operator>& basis,
                                       double drop_threshold = tol::gs_drop);

// D = sum_k V_k for a complete orthogonal set; reports the closure
// residual.
GramDecomposition uncertainty_equality(const DensityState& rho,
                                       const std::vector<Operator>& observables,
                                       const OrthoOperatorSet& theta);

// Sum-form bound from the first k elements of theta with unimodular phase
// weights X_m = e^{i theta_m}:
//   sum_m dA_m^2 >= X^dag (sum_{j<=k} V_j) X - sum_{m<n} 2 Re(e^{i(theta_n -
//   theta_m)} <A_check_m A_check_n>).
// Pass explicit phases (length = number of observables) or nullopt to run
// coordinate ascent with exact single-phase updates, theta_1 pinned to 0
// and seeded random restarts.
BoundReport lbk_bound(const DensityState& rho, const std::vector<Operator>& observables,
                      const OrthoOperatorSet& theta, int k,
                      const std::optional<std::vector<double>>& phases,
                      int restarts = 8, double tol = default_satisfied_tol());

nlohmann::json ortho_set_to_json(const OrthoOperatorSet& theta);
nlohmann::json decomposition_to_json(const GramDecomposition& decomposition);

}  // namespace urkit
