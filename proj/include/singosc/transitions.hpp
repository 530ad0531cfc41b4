#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "singosc/errors.hpp"
#include "singosc/model.hpp"

namespace singosc {

// Transition-probability block w_mn for m = 0..max_m, n = 0..max_n at a
// fixed reflection parameter rho, with per-row bookkeeping of the
// probability mass falling outside the stored columns.
struct TransitionTable {
  OscillatorModel model;
  double rho;
  int max_m;
  int max_n;
  Eigen::MatrixXd w;              // (max_m+1) x (max_n+1)
  Eigen::VectorXd row_tail_mass;  // 1 - sum of stored w per row
};

// Diagnostic companion of the adiabatic invariant: the mean-excitation
// sum evaluated from a truncated row, to be compared with the closed
// form.
struct InvariantDiagnostic {
  double summed_ratio;  // sum_n (n - j) w_mn / (m - j)
  double residual;      // |summed_ratio - (1 + rho)/(1 - rho)|
  int terms;            // row length used
};

// Instantaneous level E_n = 2 omega (n - j).
double energy_level(const OscillatorModel& model, int n, double omega);

// Probability of the m -> n transition, production path: the Jacobi
// polynomial closed form with every factorial and gamma factor held in
// log space.  Depends on (m, n) only through L = max, S = min, so the
// result is symmetric by construction.
double transition_probability(const OscillatorModel& model, int m, int n,
                              double rho);

// Same quantity through the terminating hypergeometric form; kept as an
// independently coded cross-check of the reduction between the two
// representations.
double transition_probability_hypergeometric(const OscillatorModel& model,
                                             int m, int n, double rho);

// Vacuum excitation w_0n = Gamma(n-2j) / (n! Gamma(-2j)) rho^n
// (1-rho)^(-2j); agrees with transition_probability(model, 0, n, rho).
double vacuum_probability(const OscillatorModel& model, int n, double rho);

// Fills the (max_m+1) x (max_n+1) block by transition_probability and
// records the per-row tails.
TransitionTable build_table(const OscillatorModel& model, double rho,
                            int max_m, int max_n);

// Row w_m0, w_m1, ... extended until the estimated remaining mass drops
// below tail_target.  The geometric-like decay w_{m,n+1}/w_mn -> rho is
// majorized by q = (1 + rho)/2 < 1, giving a safe tail bound that is
// immune to polynomial nodes inside the row.
std::vector<double> row_probabilities(const OscillatorModel& model, int m,
                                      double rho,
                                      double tail_target = 1e-12);

// Generating functions G_m(z) = sum_n w_mn z^n for m = 0 and m = 1,
// principal branch of the non-integer power.  Both have a single pole at
// z = 1/rho and equal 1 at z = 1.
std::complex<double> generating_g0(const OscillatorModel& model, double rho,
                                   std::complex<double> z);
std::complex<double> generating_g1(const OscillatorModel& model, double rho,
                                   std::complex<double> z);

// Initial-to-final ratio of the adiabatic invariant <H>/(2 omega) for a
// transition out of level m: the closed form (1 + rho)/(1 - rho),
// independent of m and of the coupling.
double adiabatic_invariant_ratio(const OscillatorModel& model, int m,
                                 double rho);

// Evaluates sum_n (n - j) w_mn / (m - j) from a truncated row and reports
// how far it sits from the closed form.
InvariantDiagnostic mean_excitation_diagnostic(const OscillatorModel& model,
                                               int m, double rho,
                                               double tail_target = 1e-12);

}  // namespace singosc
