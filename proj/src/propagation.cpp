#include "singosc/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "singosc/reflection.hpp"
#include "singosc/transitions.hpp"

namespace singosc {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void check_level_window(int level, int dimension, const char* what) {
  if (level < 0) {
    throw RangeError(std::string(what) + " must be >= 0");
  }
  if (4 * level >= dimension) {
    throw TruncationError(
        std::string(what) + "=" + std::to_string(level) +
        " is too close to the truncation edge for N=" +
        std::to_string(dimension) + " (need " + what + " < N/4)");
  }
}

// y = H(omega^2) x with the tridiagonal structure applied directly:
// diagonal (w2+1)(n-j), sub/super-diagonal -+ i (w2-1) c_n / 2.
void apply_h(const GeneratorMatrices& gen, double w2,
             const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
  const int n = gen.dimension;
  const double dcoef = w2 + 1.0;
  const std::complex<double> b = kI * 0.5 * (w2 - 1.0);
  y.resize(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> acc = dcoef * gen.j0_diagonal(i) * x(i);
    if (i + 1 < n) acc += b * gen.ladder_offdiag(i) * x(i + 1);
    if (i > 0) acc -= b * gen.ladder_offdiag(i - 1) * x(i - 1);
    y(i) = acc;
  }
}

// Krylov (Lanczos) evaluation of exp(-i h H) v with full
// reorthogonalization.  Returns false when the a-posteriori residual
// estimate does not reach tol within kmax vectors; the caller then
// shrinks the step.  The projected exponential is exactly unitary, so
// truncation shows up as state error, never as norm drift.
bool lanczos_exp(const GeneratorMatrices& gen, double w2, double h,
                 const Eigen::VectorXcd& v, double tol, int kmax,
                 Eigen::VectorXcd& out) {
  const int n = gen.dimension;
  const double vnorm = v.norm();
  Eigen::MatrixXcd basis(n, kmax);
  Eigen::VectorXd alpha(kmax), beta(kmax);
  basis.col(0) = v / vnorm;

  Eigen::VectorXcd w(n);
  int m = 0;          // current subspace size
  bool exact = false; // happy breakdown: subspace is invariant
  Eigen::VectorXcd u; // exp(-i h T_m) e_1 in the Krylov coordinates

  auto small_exp = [&](int size) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(alpha.head(size), beta.head(size - 1),
                              Eigen::ComputeEigenvectors);
    const Eigen::VectorXd q0 = es.eigenvectors().row(0);
    Eigen::VectorXcd phases(size);
    for (int i = 0; i < size; ++i) {
      phases(i) = std::exp(-kI * h * es.eigenvalues()(i)) * q0(i);
    }
    u = es.eigenvectors() * phases;
  };

  while (m < kmax) {
    apply_h(gen, w2, basis.col(m), w);
    alpha(m) = w.dot(basis.col(m)).real();
    w -= alpha(m) * basis.col(m);
    if (m > 0) w -= beta(m - 1) * basis.col(m - 1);
    // one full reorthogonalization pass
    for (int j = 0; j <= m; ++j) {
      w -= basis.col(j).dot(w) * basis.col(j);
    }
    beta(m) = w.norm();
    ++m;
    const double scale = std::abs(alpha(m - 1)) + beta(m - 1) + 1.0;
    if (beta(m - 1) < 1e-14 * scale) {
      exact = true;
      break;
    }
    // Convergence test every third vector; the projected eigensolve is
    // the expensive part of an iteration.
    if (m >= 3 && m % 3 == 0) {
      small_exp(m);
      const double est = beta(m - 1) * h * std::abs(u(m - 1));
      if (est < tol) break;
    }
    if (m < kmax) basis.col(m) = w / beta(m - 1);
  }

  if (exact || m % 3 != 0 || m < 3) {
    small_exp(m);
  }
  if (!exact && m == kmax &&
      beta(m - 1) * h * std::abs(u(m - 1)) >= tol) {
    return false;
  }
  out.noalias() = basis.leftCols(m) * (vnorm * u);
  return true;
}

// One Crank-Nicolson step: (I + i h/2 H) psi_new = (I - i h/2 H) psi,
// with H frozen at the interval midpoint; complex Thomas solve on the
// tridiagonal system.
void crank_nicolson_step(const GeneratorMatrices& gen, double w2, double h,
                         Eigen::VectorXcd& psi, Eigen::VectorXcd& rhs,
                         Eigen::VectorXcd& cprime) {
  const int n = gen.dimension;
  const double dcoef = w2 + 1.0;
  const std::complex<double> bcoef = kI * 0.5 * (w2 - 1.0);
  const std::complex<double> half_ih = kI * 0.5 * h;

  // rhs = (I - i h/2 H) psi
  for (int i = 0; i < n; ++i) {
    std::complex<double> acc = dcoef * gen.j0_diagonal(i) * psi(i);
    if (i + 1 < n) acc += bcoef * gen.ladder_offdiag(i) * psi(i + 1);
    if (i > 0) acc -= bcoef * gen.ladder_offdiag(i - 1) * psi(i - 1);
    rhs(i) = psi(i) - half_ih * acc;
  }

  // Thomas forward sweep for A = I + i h/2 H; A is strictly diagonally
  // dominant (|1 + i h/2 d_i| > h/2 (|b_{i-1}| + |b_i|)), so no pivoting
  // is needed.
  auto adiag = [&](int i) {
    return 1.0 + half_ih * dcoef * gen.j0_diagonal(i);
  };
  auto asuper = [&](int i) {  // A(i, i+1)
    return half_ih * bcoef * gen.ladder_offdiag(i);
  };
  auto asub = [&](int i) {  // A(i+1, i)
    return -half_ih * bcoef * gen.ladder_offdiag(i);
  };

  std::complex<double> denom = adiag(0);
  cprime(0) = asuper(0) / denom;
  psi(0) = rhs(0) / denom;
  for (int i = 1; i < n; ++i) {
    denom = adiag(i) - asub(i - 1) * cprime(i - 1);
    if (i + 1 < n) cprime(i) = asuper(i) / denom;
    psi(i) = (rhs(i) - asub(i - 1) * psi(i - 1)) / denom;
  }
  for (int i = n - 2; i >= 0; --i) {
    psi(i) -= cprime(i) * psi(i + 1);
  }
}

double top_band_weight(const Eigen::VectorXcd& psi) {
  const int n = static_cast<int>(psi.size());
  const int start = (9 * n + 9) / 10;  // ceil(0.9 N)
  double weight = 0.0;
  for (int i = start; i < n; ++i) weight += std::norm(psi(i));
  return weight;
}

struct EigenBasis {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

EigenBasis solve_basis(const GeneratorMatrices& gen, double omega) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      hamiltonian_matrix(gen, omega));
  if (es.info() != Eigen::Success) {
    throw Error("eigensolver failed for the truncated Hamiltonian");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXcd phase_fixed_column(const Eigen::MatrixXcd& vectors, int m) {
  Eigen::VectorXcd v = vectors.col(m);
  int imax = 0;
  double best = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  v *= std::conj(v(imax)) / best;
  return v;
}

}  // namespace

FockVector initial_state(const GeneratorMatrices& gen, double omega_minus,
                         int m) {
  check_level_window(m, gen.dimension, "m");
  const EigenBasis basis = solve_basis(gen, omega_minus);
  FockVector psi;
  psi.amplitudes = phase_fixed_column(basis.vectors, m);
  psi.norm_defect = std::abs(psi.amplitudes.squaredNorm() - 1.0);
  return psi;
}

FockVector propagate(const GeneratorMatrices& gen,
                     const FrequencyProfile& profile, const FockVector& psi0,
                     const SolverSettings& settings, StepMethod method) {
  profile.validate(settings.asymptote_tol);
  const double t0 = profile.t_start();
  const double t1 = profile.t_end();
  const double span = t1 - t0;
  Eigen::VectorXcd psi = psi0.amplitudes;

  if (method == StepMethod::CrankNicolson) {
    const double h_req = settings.fixed_step > 0.0 ? settings.fixed_step
                                                   : span / 5000.0;
    const long long nsteps =
        std::max<long long>(1, std::llround(span / h_req));
    const double h = span / static_cast<double>(nsteps);
    Eigen::VectorXcd rhs(gen.dimension), cprime(gen.dimension);
    for (long long k = 0; k < nsteps; ++k) {
      const double tmid = t0 + (static_cast<double>(k) + 0.5) * h;
      crank_nicolson_step(gen, profile.omega_squared(tmid), h, psi, rhs,
                          cprime);
    }
  } else {
    const double max_step =
        settings.max_step > 0.0 ? settings.max_step : 0.25;
    double h = std::min(max_step, span / 50.0);
    // Largest step the Krylov evaluation is currently known to sustain;
    // re-expanded gradually after a convergence failure so the controller
    // does not oscillate between failing at max_step and succeeding at
    // half of it.
    double krylov_ceiling = max_step;
    double t = t0;
    int rejections = 0;  // consecutive, reset on every accepted step
    Eigen::VectorXcd full(gen.dimension), half(gen.dimension);
    while (t < t1) {
      h = std::min(h, t1 - t);
      const double tol_step = settings.rel_tol * h + settings.abs_tol;
      const double ltol = 0.05 * tol_step;
      const bool ok =
          lanczos_exp(gen, profile.omega_squared(t + 0.5 * h), h, psi, ltol,
                      settings.krylov_max, full) &&
          lanczos_exp(gen, profile.omega_squared(t + 0.25 * h), 0.5 * h, psi,
                      ltol, settings.krylov_max, half) &&
          lanczos_exp(gen, profile.omega_squared(t + 0.75 * h), 0.5 * h, half,
                      ltol, settings.krylov_max, half);
      if (!ok) {
        h *= 0.5;
        krylov_ceiling = h;
        if (++rejections > 400) {
          throw NormDriftError(
              "propagate: Krylov exponential failed to converge even at "
              "minimal step");
        }
        continue;
      }
      const double delta = (full - half).norm();
      if (delta <= tol_step) {
        t += h;
        psi.swap(half);
        rejections = 0;
        krylov_ceiling = std::min(krylov_ceiling * 1.05, max_step);
      } else if (++rejections > 400) {
        throw NormDriftError(
            "propagate: step controller failed to satisfy the local "
            "error target");
      }
      const double factor = std::clamp(
          0.9 * std::sqrt(tol_step / std::max(delta, 1e-300)), 0.2, 5.0);
      h = std::min({h * factor, max_step, krylov_ceiling});
    }
  }

  FockVector result;
  result.amplitudes = std::move(psi);
  result.norm_defect = std::abs(result.amplitudes.squaredNorm() - 1.0);
  if (result.norm_defect > settings.norm_tol) {
    throw NormDriftError("propagate: norm defect " +
                         std::to_string(result.norm_defect) +
                         " exceeds tolerance");
  }
  const double leak = top_band_weight(result.amplitudes);
  if (leak > settings.leakage_tol) {
    throw LeakageError(
        "propagate: " + std::to_string(leak) +
        " probability weight reached the top of the truncated basis; "
        "increase N");
  }
  return result;
}

Eigen::VectorXd extract_probabilities(const GeneratorMatrices& gen,
                                      double omega_plus,
                                      const FockVector& psi_final,
                                      int n_max) {
  check_level_window(n_max, gen.dimension, "n_max");
  const EigenBasis basis = solve_basis(gen, omega_plus);
  Eigen::VectorXd probs(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    probs(n) = std::norm(basis.vectors.col(n).dot(psi_final.amplitudes));
  }
  return probs;
}

OracleReport compare(const OscillatorModel& model,
                     const FrequencyProfile& profile, int m_max, int n_max,
                     const SolverSettings& settings) {
  const GeneratorMatrices gen = build_generators(model, settings.basis_size);
  check_level_window(m_max, gen.dimension, "m_max");
  check_level_window(n_max, gen.dimension, "n_max");

  const AlgebraReport algebra = check_algebra(gen);
  if (algebra.commutator_defect > 1e-12 || algebra.casimir_defect > 1e-12) {
    throw Error("generator matrices failed the algebra self-check");
  }

  const ReflectionResult refl =
      compute_rho(profile, SolverSettings::classical());

  OracleReport report;
  report.truncation = gen.dimension;
  report.rho = refl.rho;
  report.w_closed = build_table(model, refl.rho, m_max, n_max).w;
  report.w_numeric.resize(m_max + 1, n_max + 1);
  report.leakage = 0.0;
  report.solver_steps = refl.solver_steps;

  const EigenBasis in_basis = solve_basis(gen, profile.omega_minus());
  const EigenBasis out_basis = solve_basis(gen, profile.omega_plus());
  // The top quarter of the truncated spectrum is distorted by the cutoff
  // and is discarded; final-state mass the retained eigenpairs cannot
  // account for means the ladder was too short for this transition.
  const int kept = (3 * gen.dimension) / 4;

  for (int m = 0; m <= m_max; ++m) {
    FockVector psi0;
    psi0.amplitudes = phase_fixed_column(in_basis.vectors, m);
    psi0.norm_defect = std::abs(psi0.amplitudes.squaredNorm() - 1.0);
    const FockVector psi = propagate(gen, profile, psi0, settings);
    const Eigen::VectorXcd projected =
        out_basis.vectors.leftCols(kept).adjoint() * psi.amplitudes;
    const double uncaptured = std::max(
        0.0, psi.amplitudes.squaredNorm() - projected.squaredNorm());
    if (uncaptured > settings.leakage_tol) {
      throw LeakageError(
          "compare: " + std::to_string(uncaptured) +
          " probability weight falls outside the retained final "
          "eigenpairs; increase N");
    }
    report.leakage = std::max(
        {report.leakage, top_band_weight(psi.amplitudes), uncaptured});
    for (int n = 0; n <= n_max; ++n) {
      report.w_numeric(m, n) =
          std::norm(out_basis.vectors.col(n).dot(psi.amplitudes));
    }
  }
  report.max_abs_diff =
      (report.w_numeric - report.w_closed).cwiseAbs().maxCoeff();
  return report;
}

}  // namespace singosc
