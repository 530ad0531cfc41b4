#pragma once

#include <Eigen/Dense>

#include "singosc/errors.hpp"
#include "singosc/model.hpp"
#include "singosc/profile.hpp"
#include "singosc/settings.hpp"
#include "singosc/su11.hpp"

namespace singosc {

// State vector in the fixed reference basis (the omega = 1 eigenbasis,
// where the Hamiltonian is diagonal).
struct FockVector {
  Eigen::VectorXcd amplitudes;
  double norm_defect = 0.0;  // | ||psi||^2 - 1 |
};

// Side-by-side result of the closed-form pipeline and the brute-force
// propagation.
struct OracleReport {
  Eigen::MatrixXd w_numeric;  // |<phi_n(w+)|psi_m(t_end)>|^2
  Eigen::MatrixXd w_closed;   // closed form at the classical rho
  double max_abs_diff;
  int truncation;     // basis size N
  double leakage;     // worst truncation-leak measure across runs: weight
                      // on the top Fock band or outside the retained
                      // final eigenpairs
  double rho;         // classical reflection parameter used
  int solver_steps;   // accepted steps of the classical-rho integration
};

enum class StepMethod {
  ExponentialMidpoint,  // adaptive, Krylov-evaluated matrix exponential
  CrankNicolson,        // fixed-step rational (tridiagonal solve)
};

// (m+1)-th lowest eigenvector of the truncated H(omega_minus), phase-fixed
// so its largest-magnitude component is real positive.  Levels in the top
// three quarters of the truncated spectrum are distorted by the cutoff,
// so m must stay below N/4.
FockVector initial_state(const GeneratorMatrices& gen, double omega_minus,
                         int m);

// Integrates i dpsi/dt = H(t) psi across the profile window.  Both step
// methods are exactly norm-preserving up to roundoff; accuracy is
// controlled by step-doubling (adaptive method) or the fixed step.
// Throws NormDriftError or LeakageError when the respective gate fails.
FockVector propagate(const GeneratorMatrices& gen,
                     const FrequencyProfile& profile, const FockVector& psi0,
                     const SolverSettings& settings = SolverSettings::schrodinger(),
                     StepMethod method = StepMethod::ExponentialMidpoint);

// Projects onto the lowest eigenvectors of the truncated H(omega_plus):
// returns |<phi_n|psi>|^2 for n = 0..n_max.
Eigen::VectorXd extract_probabilities(const GeneratorMatrices& gen,
                                      double omega_plus,
                                      const FockVector& psi_final, int n_max);

// Full validation pipeline: classical rho -> closed forms on one side,
// initial_state -> propagate -> extract_probabilities on the other, for
// every initial level m = 0..m_max.  The generator matrices are rebuilt
// at settings.basis_size and pass the algebra checks before any run.
OracleReport compare(const OscillatorModel& model,
                     const FrequencyProfile& profile, int m_max, int n_max,
                     const SolverSettings& settings = SolverSettings::schrodinger());

}  // namespace singosc
