#pragma once

namespace singosc {

// Tolerance bundle shared by the classical reflection integrator and the
// truncated-basis Schrodinger propagator.  The two factory presets carry
// the accepted defaults; tests that probe failure paths override fields
// explicitly.
struct SolverSettings {
  // Local error control for the adaptive steppers.  The classical solver
  // applies them per component of (xi, xi'); the quantum propagator uses
  // rel_tol as an error-per-unit-time target.
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;

  // Hard cap on the step size.  0 means "choose from the window span".
  double max_step = 0.0;

  // Fixed step for non-adaptive methods (Crank-Nicolson cross-check).
  // 0 means "derive from max_step".
  double fixed_step = 0.0;

  // Profile endpoints must sit on their asymptotes to this relative
  // tolerance before any plane-wave matching is attempted.
  double asymptote_tol = 1e-8;

  // Acceptance gate on | |C|^2 - |D|^2 - w-/w+ |.  Runs that fail are
  // retried with tightened local tolerances before giving up.
  double wronskian_tol = 1e-8;
  int max_refinements = 2;

  // Quantum-propagation knobs.
  int basis_size = 200;       // truncation N for oracle comparisons
  double norm_tol = 1e-8;     // total norm-defect gate
  double leakage_tol = 1e-8;  // top-of-basis weight gate
  int krylov_max = 40;        // Lanczos subspace cap per exponential

  static SolverSettings classical() { return SolverSettings{}; }

  static SolverSettings schrodinger() {
    SolverSettings s;
    s.rel_tol = 1e-6;
    s.abs_tol = 1e-12;
    s.max_step = 0.25;
    return s;
  }
};

}  // namespace singosc
