#include "urkit/bounds.hpp"

#include <cmath>
#include <string>

namespace urkit {

namespace {

void require_hermitian_observable(const Operator& op, const char* who, const char* name) {
  if (!op.hermitian) {
    throw NotHermitian(std::string(who) + ": operator " + name + " must be Hermitian");
  }
}

BoundReport make_report(double lhs, double rhs, double tol) {
  BoundReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = lhs - rhs;
  report.tol = tol;
  report.satisfied = report.slack >= -tol;
  return report;
}

double abs2(Complex z) {
  return std::norm(z);
}

}  // namespace

nlohmann::json bound_report_to_json(const BoundReport& report) {
  nlohmann::json components = nlohmann::json::object();
  for (const auto& [name, value] : report.components) {
    components[name] = {value.real(), value.imag()};
  }
  nlohmann::json j{{"lhs", report.lhs},
                   {"rhs", report.rhs},
                   {"slack", report.slack},
                   {"tol", report.tol},
                   {"satisfied", report.satisfied},
                   {"components", components}};
  if (!report.labels.empty()) {
    j["labels"] = report.labels;
  }
  return j;
}

BoundReport sur_bound(const DensityState& rho, const Operator& a, const Operator& b,
                      double tol) {
  require_hermitian_observable(a, "sur_bound", "A");
  require_hermitian_observable(b, "sur_bound", "B");
  const Operator a_check = checked(rho, a);
  const Operator b_check = checked(rho, b);
  // For Hermitian inputs the generalized brackets of the checked pair are
  // the ordinary <[A,B]> and <{A_check,B_check}>.
  const Brackets brackets = generalized_brackets(rho, a_check, b_check);
  const double commutator_term = 0.25 * abs2(brackets.commutator_ev);
  const double anticommutator_term = 0.25 * abs2(brackets.anticommutator_ev);
  const double lhs = variance(rho, a) * variance(rho, b);

  BoundReport report = make_report(lhs, commutator_term + anticommutator_term, tol);
  report.components["commutator_term"] = commutator_term;
  report.components["anticommutator_term"] = anticommutator_term;
  return report;
}

BoundReport maccone_pati_bound(const DensityState& rho, const Operator& a, const Operator& b,
                               const Vector& psi_perp, MpSign sign, double tol,
                               double ortho_tol) {
  require_hermitian_observable(a, "maccone_pati_bound", "A");
  require_hermitian_observable(b, "maccone_pati_bound", "B");
  if (psi_perp.size() != rho.dim) {
    throw DimensionMismatch("maccone_pati_bound: psi_perp has length " +
                            std::to_string(psi_perp.size()) + ", state dimension is " +
                            std::to_string(rho.dim));
  }
  const double norm = psi_perp.norm();
  if (!(norm > 0.0)) {
    throw ZeroVector("maccone_pati_bound: psi_perp has zero norm");
  }
  const Vector perp = psi_perp / norm;
  const double support_overlap = (rho.rho * perp).norm();
  if (support_overlap > ortho_tol) {
    throw NotOrthogonal("maccone_pati_bound: ||rho psi_perp|| = " +
                        std::to_string(support_overlap) + " exceeds tolerance");
  }

  const double lhs = variance(rho, a) + variance(rho, b);
  const Complex comm_ev = (rho.rho * (a.m * b.m - b.m * a.m)).trace();
  const double i_comm = (Complex(0, 1) * comm_ev).real();
  if (std::abs((Complex(0, 1) * comm_ev).imag()) > tol::imag_leak) {
    throw NumericalInconsistency("maccone_pati_bound: i<[A,B]> is not real");
  }

  // quadratic(s) = <psi_perp|(A - s iB) rho (A + s iB)|psi_perp>.
  auto quadratic = [&](double s) {
    const Vector w = (a.m + Complex(0, s) * b.m) * perp;
    const Complex value = w.dot(rho.rho * w);  // Eigen dot conjugates the left factor
    return value.real();
  };
  const double quad_plus = quadratic(+1.0);
  const double quad_minus = quadratic(-1.0);
  const double rhs_plus = quad_plus + i_comm;
  const double rhs_minus = quad_minus - i_comm;

  double rhs = 0.0;
  std::string chosen;
  switch (sign) {
    case MpSign::plus:
      rhs = rhs_plus;
      chosen = "plus";
      break;
    case MpSign::minus:
      rhs = rhs_minus;
      chosen = "minus";
      break;
    case MpSign::best:
      rhs = std::max(rhs_plus, rhs_minus);
      chosen = rhs_plus >= rhs_minus ? "plus" : "minus";
      break;
  }

  BoundReport report = make_report(lhs, rhs, tol);
  report.components["rhs_plus"] = rhs_plus;
  report.components["rhs_minus"] = rhs_minus;
  report.components["quadratic_plus"] = quad_plus;
  report.components["quadratic_minus"] = quad_minus;
  report.components["commutator_term"] = i_comm;
  report.labels["chosen_sign"] = chosen;
  return report;
}

BoundReport unified_equality(const DensityState& rho, const Operator& a, const Operator& b,
                             double tol_eq, double degen_tol) {
  const double bb = second_origin_moment(rho, b);
  if (bb <= degen_tol) {
    throw DegenerateInformationOperator(
        "unified_equality: <B^dag B> = " + std::to_string(bb) +
        " is degenerate, the remainder operator C is undefined");
  }
  const double aa = second_origin_moment(rho, a);
  const double lhs = aa * bb;

  const Brackets brackets = generalized_brackets(rho, a, b);
  const double commutator_term = 0.25 * abs2(brackets.commutator_ev);
  const double anticommutator_term = 0.25 * abs2(brackets.anticommutator_ev);

  // C = A - (<B^dag A>/<B^dag B>) B, built explicitly.
  const Complex ba = form(rho, b, a);
  const Operator c_op = Operator::from_matrix(a.m - (ba / bb) * b.m);
  const double remainder_term = second_origin_moment(rho, c_op) * bb;

  const double rhs = commutator_term + anticommutator_term + remainder_term;
  const double residual = std::abs(lhs - rhs);
  const double abs_tol = tol_eq * std::max(1.0, std::abs(lhs));

  BoundReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = lhs - rhs;
  report.tol = abs_tol;
  report.satisfied = residual <= abs_tol;
  report.components["commutator_term"] = commutator_term;
  report.components["anticommutator_term"] = anticommutator_term;
  report.components["remainder_term"] = remainder_term;
  report.components["residual"] = residual;
  return report;
}

BoundReport info_operator_bound(const DensityState& rho, const Operator& f, const Operator& o,
                                double tol, double degen_tol) {
  const double oo = second_origin_moment(rho, o);
  if (oo <= degen_tol) {
    throw DegenerateInformationOperator("info_operator_bound: <O^dag O> = " +
                                        std::to_string(oo) + " is degenerate");
  }
  const double lhs = second_origin_moment(rho, f);
  const Brackets brackets = generalized_brackets(rho, f, o);
  const double rhs = (abs2(brackets.commutator_ev) + abs2(brackets.anticommutator_ev)) / (4.0 * oo);
  // Same bound through the form: |<O^dag F>|^2 / <O^dag O>.
  const double cross_check = abs2(form(rho, o, f)) / oo;
  if (std::abs(rhs - cross_check) > 1e-12 * std::max(1.0, rhs)) {
    throw NumericalInconsistency("info_operator_bound: bracket route " + std::to_string(rhs) +
                                 " disagrees with form route " + std::to_string(cross_check));
  }

  BoundReport report = make_report(lhs, rhs, tol);
  report.components["commutator_term"] = abs2(brackets.commutator_ev) / (4.0 * oo);
  report.components["anticommutator_term"] = abs2(brackets.anticommutator_ev) / (4.0 * oo);
  report.components["cross_check"] = cross_check;
  report.components["info_norm"] = oo;
  return report;
}

namespace {

struct Eq8Candidate {
  bool admissible = false;
  double value = 0.0;
  double theta_star = 0.0;
};

Eq8Candidate eq8_candidate(const DensityState& rho, const Operator& o,
                           const Operator& a_check, const Operator& b_check,
                           Complex w0, double degen_tol) {
  Eq8Candidate cand;
  const double n = second_origin_moment(rho, o);
  if (n <= degen_tol) return cand;
  const Complex u = form(rho, o, a_check);
  const Complex v = form(rho, o, b_check);
  // LB(theta) = |u + e^{i theta} v|^2 / n - 2 Re(e^{i theta} w0)
  //           = c0 + 2 Re(e^{i theta} z).
  const double c0 = (std::norm(u) + std::norm(v)) / n;
  const Complex z = v * std::conj(u) / n - w0;
  cand.admissible = true;
  cand.theta_star = std::abs(z) > 0.0 ? -std::arg(z) : 0.0;
  cand.value = c0 + 2.0 * std::abs(z);
  return cand;
}

}  // namespace

BoundReport eq8_bound(const DensityState& rho, const Operator& a, const Operator& b,
                      const Operator& r_op, const Operator& s_op, double tol,
                      double degen_tol) {
  require_hermitian_observable(a, "eq8_bound", "A");
  require_hermitian_observable(b, "eq8_bound", "B");
  const Operator a_check = checked(rho, a);
  const Operator b_check = checked(rho, b);
  const Complex w0 = form(rho, a_check, b_check);
  const double lhs =
      second_origin_moment(rho, a_check) + second_origin_moment(rho, b_check);

  const Eq8Candidate cand_r = eq8_candidate(rho, r_op, a_check, b_check, w0, degen_tol);
  const Eq8Candidate cand_s = eq8_candidate(rho, s_op, a_check, b_check, w0, degen_tol);
  if (!cand_r.admissible && !cand_s.admissible) {
    throw DegenerateInformationOperator(
        "eq8_bound: both information operators have vanishing <O^dag O>");
  }

  const bool r_wins = cand_r.admissible && (!cand_s.admissible || cand_r.value >= cand_s.value);
  const Eq8Candidate& winner = r_wins ? cand_r : cand_s;

  BoundReport report = make_report(lhs, winner.value, tol);
  report.components["theta_star"] = winner.theta_star;
  report.components["w0"] = w0;
  if (cand_r.admissible) report.components["lb_r"] = cand_r.value;
  if (cand_s.admissible) report.components["lb_s"] = cand_s.value;
  report.labels["chosen_info_operator"] = r_wins ? "R" : "S";
  return report;
}

BoundReport demo_nonhermitian(const DensityState& rho, double tol) {
  if (rho.dim != 2) {
    throw DimensionMismatch("demo_nonhermitian needs a qubit state, got dimension " +
                            std::to_string(rho.dim));
  }
  const LadderOperators ladder = ladder_operators();
  const Operator& sp = ladder.sigma_plus;
  const Operator& sm = ladder.sigma_minus;

  // Naive SUR-form check with ordinary (non-generalized) brackets.
  const Complex comm_naive = (rho.rho * (sp.m * sm.m - sm.m * sp.m)).trace();
  const Operator sp_check = checked(rho, sp);
  const Operator sm_check = checked(rho, sm);
  const Complex anti_naive =
      (rho.rho * (sp_check.m * sm_check.m + sm_check.m * sp_check.m)).trace();
  const double lhs = variance(rho, sp) * variance(rho, sm);
  const double rhs = 0.25 * abs2(comm_naive) + 0.25 * abs2(anti_naive);

  BoundReport report = make_report(lhs, rhs, tol);
  report.components["naive_commutator_term"] = 0.25 * abs2(comm_naive);
  report.components["naive_anticommutator_term"] = 0.25 * abs2(anti_naive);

  // The generalized brackets of (sigma+, sigma-) vanish identically.
  const Brackets gen = generalized_brackets(rho, sp, sm);
  report.components["generalized_commutator_ev"] = gen.commutator_ev;
  report.components["generalized_anticommutator_ev"] = gen.anticommutator_ev;

  if (second_origin_moment(rho, sm) > tol::degenerate) {
    const BoundReport unified = unified_equality(rho, sp, sm);
    report.components["unified_residual"] = unified.components.at("residual");
    report.labels["unified_equality"] = unified.satisfied ? "holds" : "violated";
  } else {
    report.labels["unified_equality"] = "inadmissible";
  }
  report.labels["naive_relation"] = report.satisfied ? "holds" : "violated";
  return report;
}

BoundReport boson_energy_bound(const DensityState& rho, const Operator& a1, const Operator& a2,
                               double tol) {
  const double energy1 = second_origin_moment(rho, a1);
  const double energy2 = second_origin_moment(rho, a2);
  const Brackets brackets = generalized_brackets(rho, a1, a2);
  const double commutator_term = 0.25 * abs2(brackets.commutator_ev);
  const double anticommutator_term = 0.25 * abs2(brackets.anticommutator_ev);

  BoundReport report =
      make_report(energy1 * energy2, commutator_term + anticommutator_term, tol);
  report.components["energy_1"] = energy1;
  report.components["energy_2"] = energy2;
  report.components["commutator_term"] = commutator_term;
  report.components["anticommutator_term"] = anticommutator_term;
  return report;
}

}  // namespace urkit
