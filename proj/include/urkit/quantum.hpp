#pragma once

// Validated quantum states, operator wrappers, and constructors for the
// concrete systems used downstream: spin-j triples, qubit ladder operators,
// truncated bosonic modes, matrix-unit bases and seeded random ensembles.

#include <cstdint>
#include <variant>
#include <vector>

#include "urkit/numerics.hpp"
#include "urkit/random.hpp"

namespace urkit {

// Density matrix with validation metadata. Construct through from_matrix
// (or the samplers), which enforces Hermiticity, positivity and unit trace
// and computes rank/purity.
struct DensityState {
  Matrix rho;
  int dim = 0;
  int rank = 0;
  bool pure = false;

  static DensityState from_matrix(const Matrix& rho, double herm_tol = tol::hermitian);
};

struct Operator {
  Matrix m;
  bool hermitian = false;

  static Operator from_matrix(const Matrix& m);
};

enum class Ensemble { haar_pure, hs_mixed, ginibre_operator, hermitian_gue };

struct RandomSpec {
  std::uint64_t seed = 0;
  int dim = 2;
  Ensemble ensemble = Ensemble::hs_mixed;
};

// rho = |psi><psi| / <psi|psi>; ZeroVector when the amplitudes vanish.
DensityState pure_state(const Vector& amplitudes);

struct SpinOperators {
  Operator jx, jy, jz;
};

// Angular-momentum matrices with hbar = 1 in the Jz eigenbasis, ordered
// m = j .. -j top-down; dimension is two_j + 1.
SpinOperators spin_operators(int two_j);

struct LadderOperators {
  Operator sigma_plus;   // |e><g|
  Operator sigma_minus;  // |g><e|
};

// Qubit raising/lowering operators in basis order (e, g).
LadderOperators ladder_operators();

// Truncated annihilation operator, a|n> = sqrt(n)|n-1> for n < cutoff.
// Bosonic identities hold only on the retained subspace; in particular
// [a, a^dag] deviates from the identity in the (cutoff-1) diagonal entry.
Operator boson_annihilator(int cutoff);

// Kronecker product, left factor outer (row-major block convention).
Operator tensor_product(const Operator& a, const Operator& b);

std::variant<DensityState, Operator> sample(const RandomSpec& spec);

// Typed wrappers; InvalidSpec if the ensemble yields the other kind.
DensityState sample_state(const RandomSpec& spec);
Operator sample_operator(const RandomSpec& spec);

// The d^2 matrix units E_ij = |i><j| in row-major order.
std::vector<Operator> matrix_unit_basis(int d);

// Loads and validates a density matrix; the diagnostic names the violated
// invariant (hermitian / eigenvalue / trace).
DensityState load_state(const std::string& path);

}  // namespace urkit
