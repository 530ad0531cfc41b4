#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singosc/errors.hpp"

namespace singosc {

enum class ProfileKind { Constant, SuddenJump, TanhStep, Table, PiecewiseLinear };

// Time-dependent frequency omega(t) with flat asymptotes omega_minus
// (t -> t_start) and omega_plus (t -> t_end).
//
// The smooth kinds interpolate in omega^2 (the ODE coefficient):
//   omega^2(t) = (w+^2 + w-^2)/2 + (w+^2 - w-^2)/2 * tanh((t - t0)/tau),
// with the match window fixed at t0 +/- 25*tau so the residual tanh tail
// is far below the asymptote tolerance.  A sudden jump is the same shape
// with tau equal to a small smoothing width.  Table profiles use a
// monotone cubic (PCHIP) interpolant of omega^2 through the samples;
// piecewise-linear profiles connect the sample omegas with straight
// segments.  Outside the window every profile is constant.
class FrequencyProfile {
 public:
  static FrequencyProfile constant(double omega, double t_start = 0.0,
                                   double t_end = 1.0);
  static FrequencyProfile sudden_jump(double omega_minus, double omega_plus,
                                      double t0 = 0.0, double width = 1e-4);
  static FrequencyProfile tanh_step(double omega_minus, double omega_plus,
                                    double tau, double t0 = 0.0);
  static FrequencyProfile table(std::vector<std::pair<double, double>> samples);
  static FrequencyProfile piecewise_linear(
      std::vector<std::pair<double, double>> samples);

  // Reads `t omega` pairs (whitespace separated, `#` comments, strictly
  // increasing t) and builds a table profile.
  static FrequencyProfile load_table(const std::string& path);

  ProfileKind kind() const { return kind_; }
  double omega(double t) const;
  double omega_squared(double t) const;
  double omega_minus() const { return omega_minus_; }
  double omega_plus() const { return omega_plus_; }
  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }

  // Checks positivity over the window and flatness at both ends:
  // |omega(end) - asymptote| and the end-to-probe variation must stay
  // below tol relative to the asymptote.  Throws AsymptoteError (or
  // RangeError for a nonpositive omega).
  void validate(double tol = 1e-8) const;

 private:
  FrequencyProfile() = default;

  ProfileKind kind_ = ProfileKind::Constant;
  double omega_minus_ = 1.0;
  double omega_plus_ = 1.0;
  double t_start_ = 0.0;
  double t_end_ = 1.0;
  // tanh parameters
  double t0_ = 0.0;
  double tau_ = 1.0;
  // table / piecewise data: nodes, omega^2 values, and (table kind)
  // PCHIP slopes of omega^2
  std::vector<double> knot_t_;
  std::vector<double> knot_w2_;
  std::vector<double> knot_slope_;
};

}  // namespace singosc
