#include "singosc/reflection.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace singosc {

namespace {

using State = Eigen::Vector2cd;  // (xi, xi')
constexpr std::complex<double> kI{0.0, 1.0};

State rhs(const FrequencyProfile& profile, double t, const State& y) {
  State dy;
  dy(0) = y(1);
  dy(1) = -profile.omega_squared(t) * y(0);
  return dy;
}

// Weighted RMS error norm used for step acceptance: 1.0 sits exactly on
// the tolerance surface.
double error_norm(const State& err, const State& y0, const State& y1,
                  double rel, double abs) {
  double acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double scale =
        abs + rel * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double e = std::abs(err(i)) / scale;
    acc += e * e;
  }
  return std::sqrt(0.5 * acc);
}

struct IntegrationOutcome {
  State y;
  int steps;
};

// Dormand-Prince 5(4) embedded pair with FSAL, standard controller.
IntegrationOutcome integrate(const FrequencyProfile& profile, double t0,
                             double t1, State y, double rel, double abs,
                             double max_step) {
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0,
                          a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                          a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                          a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                          a65 = -5103.0 / 18656.0;
  static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0,
                          b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                          b6 = 11.0 / 84.0;
  static constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0;
  static constexpr double e3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
  static constexpr double e4 = 125.0 / 192.0 - 393.0 / 640.0;
  static constexpr double e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
  static constexpr double e6 = 11.0 / 84.0 - 187.0 / 2100.0;
  static constexpr double e7 = -1.0 / 40.0;
  static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                          c5 = 8.0 / 9.0;

  const double span = t1 - t0;
  double h = std::min(span / 100.0, max_step);
  double t = t0;
  State k1 = rhs(profile, t, y);
  int accepted = 0;
  int rejected_in_a_row = 0;

  while (t < t1) {
    h = std::min(h, t1 - t);
    const State y2 = y + h * a21 * k1;
    const State k2 = rhs(profile, t + c2 * h, y2);
    const State y3 = y + h * (a31 * k1 + a32 * k2);
    const State k3 = rhs(profile, t + c3 * h, y3);
    const State y4 = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    const State k4 = rhs(profile, t + c4 * h, y4);
    const State y5 = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    const State k5 = rhs(profile, t + c5 * h, y5);
    const State y6 =
        y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    const State k6 = rhs(profile, t + h, y6);
    const State ynew =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const State k7 = rhs(profile, t + h, ynew);
    const State err =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double en = error_norm(err, y, ynew, rel, abs);
    if (en <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      ++accepted;
      rejected_in_a_row = 0;
    } else if (++rejected_in_a_row > 60) {
      throw WronskianError(
          "classical integrator stalled: step rejected 60 times at t=" +
          std::to_string(t));
    }
    const double factor =
        std::clamp(0.9 * std::pow(std::max(en, 1e-12), -0.2), 0.2, 5.0);
    h = std::min(h * factor, max_step);
  }
  return {y, accepted};
}

ReflectionResult match_endpoint(const FrequencyProfile& profile,
                                const IntegrationOutcome& out) {
  const double wp = profile.omega_plus();
  const double wm = profile.omega_minus();
  const double t_end = profile.t_end();
  const std::complex<double> u = out.y(0);
  const std::complex<double> v = out.y(1);
  const std::complex<double> phase_p = std::exp(kI * wp * t_end);
  const std::complex<double> c =
      (kI * wp * u - v) * phase_p / (2.0 * kI * wp);
  const std::complex<double> d =
      (kI * wp * u + v) / (phase_p * 2.0 * kI * wp);
  const double c2 = std::norm(c);
  const double d2 = std::norm(d);
  ReflectionResult r;
  r.transmitted = c;
  r.reflected = d;
  r.rho = d2 / c2;
  r.wronskian_defect = std::abs(c2 - d2 - wm / wp);
  r.solver_steps = out.steps;
  return r;
}

}  // namespace

ReflectionResult compute_rho(const FrequencyProfile& profile,
                             const SolverSettings& settings) {
  profile.validate(settings.asymptote_tol);
  const double t0 = profile.t_start();
  const double t1 = profile.t_end();
  const double wm = profile.omega_minus();
  const double max_step =
      settings.max_step > 0.0 ? settings.max_step : (t1 - t0) / 16.0;

  State y0;
  y0(0) = std::exp(-kI * wm * t0);
  y0(1) = -kI * wm * y0(0);

  double rel = settings.rel_tol;
  double abs = settings.abs_tol;
  ReflectionResult result{};
  for (int attempt = 0; attempt <= settings.max_refinements; ++attempt) {
    const auto out = integrate(profile, t0, t1, y0, rel, abs, max_step);
    result = match_endpoint(profile, out);
    if (result.wronskian_defect < settings.wronskian_tol) {
      return result;
    }
    rel *= 1e-2;
    abs *= 1e-2;
  }
  throw WronskianError(
      "reflection result rejected: wronskian defect " +
      std::to_string(result.wronskian_defect) + " exceeds tolerance " +
      std::to_string(settings.wronskian_tol) + " after refinement");
}

double rho_sudden(double omega_minus, double omega_plus) {
  if (!(omega_minus > 0.0) || !(omega_plus > 0.0)) {
    throw RangeError("rho_sudden: frequencies must be positive");
  }
  const double r = (omega_plus - omega_minus) / (omega_plus + omega_minus);
  return r * r;
}

}  // namespace singosc
