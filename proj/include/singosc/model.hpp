#pragma once

#include "singosc/errors.hpp"

namespace singosc {

// Physical configuration of the singular oscillator
//
//   H = p^2/2 + omega(t)^2 x^2/2 + g/(8 x^2),   x > 0,
//
// in units hbar = m = 1.  The coupling fixes the representation weight
//
//   j = -1/2 - sqrt(1+g)/4,
//
// which labels the discrete-series ladder carrying the dynamics, and the
// near-origin exponent s of the stationary wavefunctions (psi ~ x^s).
struct OscillatorModel {
  double coupling;         // g, dimensionless
  double weight;           // j <= -1/2
  double origin_exponent;  // s = -2j - 1/2

  // -2j >= 1; the combination every closed form is written in.
  double minus_two_j() const { return -2.0 * weight; }
};

// Validates g and derives the dependent quantities.
//
// g < -1 is the fall-to-center regime and is always rejected.  The
// boundary g = -1 (weight exactly -1/2) has finite limiting formulas and
// is admitted only with allow_boundary set.
OscillatorModel make_model(double g, bool allow_boundary = false);

}  // namespace singosc
