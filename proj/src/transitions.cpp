#include "singosc/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "singosc/special_functions.hpp"

namespace singosc {

namespace {

constexpr double kRhoCeiling = 1.0 - 1e-9;

void check_rho(double rho) {
  if (!(rho >= 0.0) || !(rho <= kRhoCeiling)) {
    throw RangeError("rho must lie in [0, 1 - 1e-9], got " +
                     std::to_string(rho));
  }
}

void check_level(int n, const char* name) {
  if (n < 0) {
    throw RangeError(std::string(name) + " must be >= 0, got " +
                     std::to_string(n));
  }
}

// Shared log prefactor of the Jacobi closed form:
//   S!/L! * Gamma(L-2j)/Gamma(S-2j) * rho^(L-S) * (1-rho)^(-2j).
double log_prefactor(double minus_two_j, int big_l, int small_s, double rho) {
  return log_gamma(small_s + 1.0) - log_gamma(big_l + 1.0) +
         gamma_ratio(big_l + minus_two_j, small_s + minus_two_j).log_value +
         (big_l - small_s) * std::log(rho) +
         minus_two_j * std::log1p(-rho);
}

std::complex<double> pole_guarded_base(double rho, std::complex<double> z) {
  const std::complex<double> denom = 1.0 - rho * z;
  if (std::abs(denom) <= 1e-12 * (1.0 + std::abs(rho * z))) {
    throw PoleError("generating function pole at z = 1/rho");
  }
  return (1.0 - rho) / denom;
}

}  // namespace

double energy_level(const OscillatorModel& model, int n, double omega) {
  check_level(n, "n");
  if (!(omega > 0.0)) {
    throw RangeError("energy_level: omega must be positive, got " +
                     std::to_string(omega));
  }
  return 2.0 * omega * (static_cast<double>(n) - model.weight);
}

double transition_probability(const OscillatorModel& model, int m, int n,
                              double rho) {
  check_level(m, "m");
  check_level(n, "n");
  check_rho(rho);
  if (rho == 0.0) return m == n ? 1.0 : 0.0;
  const int big_l = std::max(m, n);
  const int small_s = std::min(m, n);
  const double minus_two_j = model.minus_two_j();
  const double p = jacobi_p(small_s, big_l - small_s, minus_two_j - 1.0,
                            1.0 - 2.0 * rho);
  if (p == 0.0) return 0.0;
  const double logw = log_prefactor(minus_two_j, big_l, small_s, rho) +
                      2.0 * std::log(std::abs(p));
  return std::exp(logw);
}

double transition_probability_hypergeometric(const OscillatorModel& model,
                                             int m, int n, double rho) {
  check_level(m, "m");
  check_level(n, "n");
  check_rho(rho);
  if (rho == 0.0) return m == n ? 1.0 : 0.0;
  const int big_l = std::max(m, n);
  const int small_s = std::min(m, n);
  const double minus_two_j = model.minus_two_j();
  const double f = hyp2f1_terminating(small_s, big_l + minus_two_j,
                                      big_l - small_s + 1.0, rho);
  if (f == 0.0) return 0.0;
  const double logpre =
      log_gamma(big_l + 1.0) - 2.0 * log_gamma(big_l - small_s + 1.0) -
      log_gamma(small_s + 1.0) +
      gamma_ratio(big_l + minus_two_j, small_s + minus_two_j).log_value +
      (big_l - small_s) * std::log(rho) + minus_two_j * std::log1p(-rho);
  return std::exp(logpre + 2.0 * std::log(std::abs(f)));
}

double vacuum_probability(const OscillatorModel& model, int n, double rho) {
  check_level(n, "n");
  check_rho(rho);
  if (rho == 0.0) return n == 0 ? 1.0 : 0.0;
  const double minus_two_j = model.minus_two_j();
  const double logw =
      gamma_ratio(n + minus_two_j, minus_two_j).log_value -
      log_gamma(n + 1.0) + n * std::log(rho) +
      minus_two_j * std::log1p(-rho);
  return std::exp(logw);
}

TransitionTable build_table(const OscillatorModel& model, double rho,
                            int max_m, int max_n) {
  check_level(max_m, "max_m");
  check_level(max_n, "max_n");
  check_rho(rho);
  TransitionTable table;
  table.model = model;
  table.rho = rho;
  table.max_m = max_m;
  table.max_n = max_n;
  table.w.resize(max_m + 1, max_n + 1);
  table.row_tail_mass.resize(max_m + 1);
  for (int m = 0; m <= max_m; ++m) {
    double row_sum = 0.0;
    for (int n = 0; n <= max_n; ++n) {
      const double w = transition_probability(model, m, n, rho);
      table.w(m, n) = w;
      row_sum += w;
    }
    table.row_tail_mass(m) = 1.0 - row_sum;
  }
  return table;
}

std::vector<double> row_probabilities(const OscillatorModel& model, int m,
                                      double rho, double tail_target) {
  check_level(m, "m");
  check_rho(rho);
  if (!(tail_target > 0.0)) {
    throw RangeError("row_probabilities: tail_target must be positive");
  }
  std::vector<double> row;
  if (rho == 0.0) {
    row.assign(m + 1, 0.0);
    row[m] = 1.0;
    return row;
  }
  const double q = 0.5 * (1.0 + rho);
  const double tail_factor = q / (1.0 - q);
  constexpr int kMaxTerms = 200000;
  double row_max = 0.0;
  // The break requires several consecutive sub-threshold terms: a single
  // small value can be an isolated polynomial node inside the row, after
  // which the probabilities rise again.
  int quiet_run = 0;
  for (int n = 0;; ++n) {
    if (n > kMaxTerms) {
      throw TruncationError(
          "row_probabilities: row did not reach the tail target within " +
          std::to_string(kMaxTerms) + " terms (rho too close to 1)");
    }
    const double w = transition_probability(model, m, n, rho);
    row.push_back(w);
    row_max = std::max(row_max, w);
    const bool quiet = n >= m + 1 && row_max > 0.0 &&
                       w < 1e-3 * row_max &&
                       w * tail_factor < tail_target;
    quiet_run = quiet ? quiet_run + 1 : 0;
    if (quiet_run >= 3) break;
  }
  return row;
}

std::complex<double> generating_g0(const OscillatorModel& model, double rho,
                                   std::complex<double> z) {
  check_rho(rho);
  return std::pow(pole_guarded_base(rho, z), model.minus_two_j());
}

std::complex<double> generating_g1(const OscillatorModel& model, double rho,
                                   std::complex<double> z) {
  check_rho(rho);
  const std::complex<double> base = pole_guarded_base(rho, z);
  const double minus_two_j = model.minus_two_j();
  const std::complex<double> ratio = (1.0 - z) / (1.0 - rho);
  const std::complex<double> bracket =
      -2.0 * model.weight * rho * ratio * ratio + z;
  return std::pow(base, minus_two_j + 2.0) * bracket;
}

double adiabatic_invariant_ratio(const OscillatorModel& model, int m,
                                 double rho) {
  (void)model;  // the ratio is representation-independent
  check_level(m, "m");
  check_rho(rho);
  return (1.0 + rho) / (1.0 - rho);
}

InvariantDiagnostic mean_excitation_diagnostic(const OscillatorModel& model,
                                               int m, double rho,
                                               double tail_target) {
  const auto row = row_probabilities(model, m, rho, tail_target);
  double sum = 0.0;
  for (std::size_t n = 0; n < row.size(); ++n) {
    sum += (static_cast<double>(n) - model.weight) * row[n];
  }
  InvariantDiagnostic diag;
  diag.summed_ratio = sum / (static_cast<double>(m) - model.weight);
  diag.residual =
      std::abs(diag.summed_ratio - (1.0 + rho) / (1.0 - rho));
  diag.terms = static_cast<int>(row.size());
  return diag;
}

}  // namespace singosc
