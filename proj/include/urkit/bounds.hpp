#pragma once

// Scalar uncertainty bounds. Every operation returns a BoundReport with the
// evaluated left side, right side, slack and named components, so callers
// (CLI, sweeps, tests) can inspect each term.

#include <map>
#include <string>

#include <json.hpp>

#include "urkit/moments.hpp"

namespace urkit {

struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  double tol = 0.0;
  bool satisfied = false;
  std::map<std::string, Complex> components;
  std::map<std::string, std::string> labels;
};

nlohmann::json bound_report_to_json(const BoundReport& report);

// Schrodinger product-form relation:
//   dA^2 dB^2 >= |<[A,B]>|^2/4 + |<{A_check,B_check}>|^2/4.
// Specified for observables; NotHermitian otherwise.
BoundReport sur_bound(const DensityState& rho, const Operator& a, const Operator& b,
                      double tol = default_satisfied_tol());

enum class MpSign { plus, minus, best };

// Sum-form bound built from a state psi_perp orthogonal to the support of
// rho. For pure rho this is the textbook
//   dA^2 + dB^2 >= |<psi|A ± iB|psi_perp>|^2 ± i<[A,B]>;
// the same expression written as <psi_perp|(A ∓ iB) rho (A ± iB)|psi_perp>
// extends it to mixed states with psi_perp orthogonal to the full support.
// sign = best evaluates both branches and keeps the larger right side.
BoundReport maccone_pati_bound(const DensityState& rho, const Operator& a, const Operator& b,
                               const Vector& psi_perp, MpSign sign = MpSign::best,
                               double tol = default_satisfied_tol(),
                               double ortho_tol = tol::support_orthogonal);

// The unified equality
//   <A^dag A><B^dag B> = |<[A,B]_G>|^2/4 + |<{A,B}_G>|^2/4 + <C^dag C><B^dag B>
// with C = A - (<B^dag A>/<B^dag B>) B constructed explicitly. Valid for
// arbitrary (also non-Hermitian) A, B. satisfied means the residual
// |lhs - rhs| stays below tol_eq relative.
BoundReport unified_equality(const DensityState& rho, const Operator& a, const Operator& b,
                             double tol_eq = tol::equality,
                             double degen_tol = tol::degenerate);

// Information-operator bound
//   <F^dag F> >= (|<i[F,O]_G>|^2 + |<{F,O}_G>|^2) / (4 <O^dag O>).
// The right side is also |<O^dag F>|^2/<O^dag O>; both routes are computed
// and cross-checked.
BoundReport info_operator_bound(const DensityState& rho, const Operator& f, const Operator& o,
                                double tol = default_satisfied_tol(),
                                double degen_tol = tol::degenerate);

// Sum-form bound with two information operators and a closed-form phase:
//   dA^2 + dB^2 >= max_O |<O^dag(A_check + e^{i theta} B_check)>|^2/<O^dag O>
//                  - <{A_check, e^{i theta} B_check}_G>,
// theta maximizing the bound. Each candidate reduces to c0 + 2 Re(e^{i
// theta} z), so theta* = -arg(z) exactly.
BoundReport eq8_bound(const DensityState& rho, const Operator& a, const Operator& b,
                      const Operator& r_op, const Operator& s_op,
                      double tol = default_satisfied_tol(),
                      double degen_tol = tol::degenerate);

// Evaluates the naive SUR-form check for the qubit ladder pair (sigma+,
// sigma-) with ordinary brackets; the resulting "bound" can fail, which is
// the point. Also records the unified-equality residual and the generalized
// brackets (identically zero for this pair) when admissible.
BoundReport demo_nonhermitian(const DensityState& rho,
                              double tol = default_satisfied_tol());

// Two-mode energy bound <a1^dag a1><a2^dag a2> >= |<[a1,a2]_G>|^2/4 +
// |<{a1,a2}_G>|^2/4 (the unified equality with its remainder dropped).
BoundReport boson_energy_bound(const DensityState& rho, const Operator& a1, const Operator& a2,
                               double tol = default_satisfied_tol());

}  // namespace urkit
