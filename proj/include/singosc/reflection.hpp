#pragma once

#include <complex>

#include "singosc/errors.hpp"
#include "singosc/profile.hpp"
#include "singosc/settings.hpp"

namespace singosc {

// Outcome of matching the classical mode function to plane waves.
//
// The mode xi solves xi'' + omega^2(t) xi = 0 with incoming data
// xi = exp(-i w- t) on the left asymptote; on the right it decomposes as
// xi -> C exp(-i w+ t) + D exp(+i w+ t).  The conserved Wronskian of the
// equation forces |C|^2 - |D|^2 = w-/w+ exactly; the recorded defect in
// that relation is the integration-quality gate.
struct ReflectionResult {
  std::complex<double> transmitted;  // C
  std::complex<double> reflected;    // D
  double rho;                        // |D|^2 / |C|^2
  double wronskian_defect;           // | |C|^2 - |D|^2 - w-/w+ |
  int solver_steps;                  // accepted adaptive steps
};

// Integrates the classical oscillator equation across the profile window
// and extracts (C, D, rho) from the endpoint value and derivative.
//
// The profile is validated first (AsymptoteError if its ends are not
// flat).  If the Wronskian defect of the result exceeds
// settings.wronskian_tol, the run is repeated with local tolerances
// tightened a hundredfold, up to settings.max_refinements times, before
// WronskianError is thrown.
ReflectionResult compute_rho(const FrequencyProfile& profile,
                             const SolverSettings& settings =
                                 SolverSettings::classical());

// Closed-form rho for an instantaneous jump w- -> w+:
// ((w+ - w-)/(w+ + w-))^2.  Used as the analytic oracle for the
// smoothed-jump limit.
double rho_sudden(double omega_minus, double omega_plus);

}  // namespace singosc
