#pragma once

// Scalar functionals of (state, operators): expectations, mean-subtracted
// operators, variances, second-order origin moments, the state-weighted
// sesquilinear form <A^dag B> and the generalized brackets.
//
// For non-Hermitian Q the variance is <Q_check^dag Q_check>; mean
// subtraction always uses the full complex expectation.

#include "urkit/quantum.hpp"

namespace urkit {

struct MomentReport {
  Complex expectation;
  double second_origin_moment = 0.0;  // <Q^dag Q>
  double variance = 0.0;              // <Q^dag Q> - |<Q>|^2
};

// Tr(rho Q).
Complex expectation(const DensityState& rho, const Operator& q);

// Q - Tr(rho Q) * I.
Operator checked(const DensityState& rho, const Operator& q);

// Tr(rho Q^dag Q), real; NumericalInconsistency if the imaginary part
// leaks beyond 1e-10 or the value is meaningfully negative.
double second_origin_moment(const DensityState& rho, const Operator& q);

double variance(const DensityState& rho, const Operator& q);

// The state-weighted sesquilinear form Tr(rho A^dag B); conjugate-symmetric.
Complex form(const DensityState& rho, const Operator& a, const Operator& b);

struct Brackets {
  Complex commutator_ev;      // <A^dag B - B^dag A>
  Complex anticommutator_ev;  // <A^dag B + B^dag A>
};

// Generalized commutator/anti-commutator expectations; reduce to the
// ordinary <[A,B]> and <{A,B}> for Hermitian inputs.
Brackets generalized_brackets(const DensityState& rho, const Operator& a, const Operator& b);

MomentReport moments(const DensityState& rho, const Operator& q);

}  // namespace urkit
