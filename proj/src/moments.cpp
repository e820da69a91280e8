#include "urkit/moments.hpp"

#include <cmath>
#include <string>

namespace urkit {

namespace {

void require_matching(const DensityState& rho, const Operator& q, const char* who) {
  if (q.m.rows() != rho.dim || q.m.cols() != rho.dim) {
    throw DimensionMismatch(std::string(who) + ": operator is " +
                            std::to_string(q.m.rows()) + "x" + std::to_string(q.m.cols()) +
                            " but the state has dimension " + std::to_string(rho.dim));
  }
}

double real_part_checked(Complex value, const char* who) {
  if (std::abs(value.imag()) > tol::imag_leak) {
    throw NumericalInconsistency(std::string(who) + ": imaginary leakage " +
                                 std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace

Complex expectation(const DensityState& rho, const Operator& q) {
  require_matching(rho, q, "expectation");
  return (rho.rho * q.m).trace();
}

Operator checked(const DensityState& rho, const Operator& q) {
  require_matching(rho, q, "checked");
  const Complex mean = (rho.rho * q.m).trace();
  return Operator::from_matrix(q.m - mean * Matrix::Identity(rho.dim, rho.dim));
}

double second_origin_moment(const DensityState& rho, const Operator& q) {
  require_matching(rho, q, "second_origin_moment");
  const Complex value = (rho.rho * q.m.adjoint() * q.m).trace();
  double re = real_part_checked(value, "second_origin_moment");
  if (re < 0.0) {
    if (re < -1e-12) {
      throw NumericalInconsistency("second_origin_moment is negative: " + std::to_string(re));
    }
    re = 0.0;  // round-off clamp
  }
  return re;
}

double variance(const DensityState& rho, const Operator& q) {
  return second_origin_moment(rho, checked(rho, q));
}

Complex form(const DensityState& rho, const Operator& a, const Operator& b) {
  require_matching(rho, a, "form");
  require_matching(rho, b, "form");
  return (rho.rho * a.m.adjoint() * b.m).trace();
}

Brackets generalized_brackets(const DensityState& rho, const Operator& a, const Operator& b) {
  const Complex ab = form(rho, a, b);
  const Complex ba = form(rho, b, a);
  return Brackets{ab - ba, ab + ba};
}

MomentReport moments(const DensityState& rho, const Operator& q) {
  MomentReport report;
  report.expectation = expectation(rho, q);
  report.second_origin_moment = second_origin_moment(rho, q);
  report.variance = variance(rho, q);
  return report;
}

}  // namespace urkit
