#include "singosc/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace singosc {

namespace {

void require_positive_omega(double omega, const char* which) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw RangeError(std::string("profile: ") + which +
                     " must be positive and finite, got " +
                     std::to_string(omega));
  }
}

// Fritsch-Carlson monotone cubic slopes for data (t_i, y_i).  On monotone
// segments the interpolant is monotone, so positive data stay positive.
std::vector<double> pchip_slopes(const std::vector<double>& t,
                                 const std::vector<double>& y) {
  const std::size_t n = t.size();
  std::vector<double> d(n, 0.0);
  if (n == 2) {
    const double delta = (y[1] - y[0]) / (t[1] - t[0]);
    d[0] = d[1] = delta;
    return d;
  }
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = t[i + 1] - t[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double slope = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (slope * d0 <= 0.0) {
      slope = 0.0;
    } else if (d0 * d1 < 0.0 && std::abs(slope) > 3.0 * std::abs(d0)) {
      slope = 3.0 * d0;
    }
    return slope;
  };
  d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

double hermite_eval(double t, double t0, double t1, double y0, double y1,
                    double d0, double d1) {
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
}

std::vector<std::pair<double, double>> checked_samples(
    std::vector<std::pair<double, double>> samples, const char* kind_name) {
  if (samples.size() < 2) {
    throw ParseError(std::string(kind_name) +
                     " profile needs at least 2 samples, got " +
                     std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].first)) {
      throw ParseError(std::string(kind_name) + " profile: sample " +
                       std::to_string(i) + " has non-finite time");
    }
    require_positive_omega(samples[i].second, "sample omega");
    if (i > 0 && !(samples[i].first > samples[i - 1].first)) {
      throw ParseError(std::string(kind_name) +
                       " profile: times must be strictly increasing "
                       "(sample " +
                       std::to_string(i) + ")");
    }
  }
  return samples;
}

}  // namespace

FrequencyProfile FrequencyProfile::constant(double omega, double t_start,
                                            double t_end) {
  require_positive_omega(omega, "omega");
  if (!(t_end > t_start)) {
    throw RangeError("constant profile: t_end must exceed t_start");
  }
  FrequencyProfile p;
  p.kind_ = ProfileKind::Constant;
  p.omega_minus_ = p.omega_plus_ = omega;
  p.t_start_ = t_start;
  p.t_end_ = t_end;
  return p;
}

FrequencyProfile FrequencyProfile::sudden_jump(double omega_minus,
                                               double omega_plus, double t0,
                                               double width) {
  FrequencyProfile p = tanh_step(omega_minus, omega_plus, width, t0);
  p.kind_ = ProfileKind::SuddenJump;
  return p;
}

FrequencyProfile FrequencyProfile::tanh_step(double omega_minus,
                                             double omega_plus, double tau,
                                             double t0) {
  require_positive_omega(omega_minus, "omega_minus");
  require_positive_omega(omega_plus, "omega_plus");
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw RangeError("tanh_step profile: tau must be positive, got " +
                     std::to_string(tau));
  }
  FrequencyProfile p;
  p.kind_ = ProfileKind::TanhStep;
  p.omega_minus_ = omega_minus;
  p.omega_plus_ = omega_plus;
  p.t0_ = t0;
  p.tau_ = tau;
  p.t_start_ = t0 - 25.0 * tau;
  p.t_end_ = t0 + 25.0 * tau;
  return p;
}

FrequencyProfile FrequencyProfile::table(
    std::vector<std::pair<double, double>> samples) {
  auto s = checked_samples(std::move(samples), "table");
  FrequencyProfile p;
  p.kind_ = ProfileKind::Table;
  p.knot_t_.reserve(s.size());
  p.knot_w2_.reserve(s.size());
  for (const auto& [t, w] : s) {
    p.knot_t_.push_back(t);
    p.knot_w2_.push_back(w * w);
  }
  p.knot_slope_ = pchip_slopes(p.knot_t_, p.knot_w2_);
  p.t_start_ = p.knot_t_.front();
  p.t_end_ = p.knot_t_.back();
  p.omega_minus_ = s.front().second;
  p.omega_plus_ = s.back().second;
  return p;
}

FrequencyProfile FrequencyProfile::piecewise_linear(
    std::vector<std::pair<double, double>> samples) {
  auto s = checked_samples(std::move(samples), "piecewise_linear");
  FrequencyProfile p;
  p.kind_ = ProfileKind::PiecewiseLinear;
  p.knot_t_.reserve(s.size());
  p.knot_w2_.reserve(s.size());
  for (const auto& [t, w] : s) {
    p.knot_t_.push_back(t);
    p.knot_w2_.push_back(w);  // stores omega itself for this kind
  }
  p.t_start_ = p.knot_t_.front();
  p.t_end_ = p.knot_t_.back();
  p.omega_minus_ = s.front().second;
  p.omega_plus_ = s.back().second;
  return p;
}

FrequencyProfile FrequencyProfile::load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open profile table '" + path + "'");
  }
  std::vector<std::pair<double, double>> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double t, w;
    if (!(ls >> t)) continue;  // blank or comment-only line
    if (!(ls >> w)) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected `t omega` pair");
    }
    std::string rest;
    if (ls >> rest) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": trailing token '" + rest + "'");
    }
    samples.emplace_back(t, w);
  }
  try {
    return table(std::move(samples));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

double FrequencyProfile::omega_squared(double t) const {
  switch (kind_) {
    case ProfileKind::Constant:
      return omega_minus_ * omega_minus_;
    case ProfileKind::SuddenJump:
    case ProfileKind::TanhStep: {
      const double wp2 = omega_plus_ * omega_plus_;
      const double wm2 = omega_minus_ * omega_minus_;
      return 0.5 * (wp2 + wm2) +
             0.5 * (wp2 - wm2) * std::tanh((t - t0_) / tau_);
    }
    case ProfileKind::Table: {
      if (t <= knot_t_.front()) return knot_w2_.front();
      if (t >= knot_t_.back()) return knot_w2_.back();
      const auto it =
          std::upper_bound(knot_t_.begin(), knot_t_.end(), t);
      const std::size_t i = static_cast<std::size_t>(it - knot_t_.begin()) - 1;
      return hermite_eval(t, knot_t_[i], knot_t_[i + 1], knot_w2_[i],
                          knot_w2_[i + 1], knot_slope_[i], knot_slope_[i + 1]);
    }
    case ProfileKind::PiecewiseLinear: {
      const double w = omega(t);
      return w * w;
    }
  }
  return omega_minus_ * omega_minus_;  // unreachable
}

double FrequencyProfile::omega(double t) const {
  if (kind_ == ProfileKind::PiecewiseLinear) {
    if (t <= knot_t_.front()) return knot_w2_.front();
    if (t >= knot_t_.back()) return knot_w2_.back();
    const auto it = std::upper_bound(knot_t_.begin(), knot_t_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - knot_t_.begin()) - 1;
    const double s = (t - knot_t_[i]) / (knot_t_[i + 1] - knot_t_[i]);
    return (1.0 - s) * knot_w2_[i] + s * knot_w2_[i + 1];
  }
  return std::sqrt(omega_squared(t));
}

void FrequencyProfile::validate(double tol) const {
  const int probes = 512;
  const double span = t_end_ - t_start_;
  for (int i = 0; i <= probes; ++i) {
    const double t = t_start_ + span * static_cast<double>(i) / probes;
    if (!(omega_squared(t) > 0.0)) {
      throw RangeError("profile: omega^2 is nonpositive at t=" +
                       std::to_string(t));
    }
  }
  const double probe = 1e-3 * span;
  auto check_end = [&](double t_edge, double inward, double target,
                       const char* which) {
    const double here = omega(t_edge);
    const double near = omega(t_edge + inward * probe);
    if (std::abs(here - target) > tol * target ||
        std::abs(near - target) > tol * target) {
      throw AsymptoteError(std::string("profile: omega is not settled on "
                                       "its asymptote at ") +
                           which + " (|omega - " + std::to_string(target) +
                           "| > " + std::to_string(tol) + " rel)");
    }
  };
  check_end(t_start_, +1.0, omega_minus_, "t_start");
  check_end(t_end_, -1.0, omega_plus_, "t_end");
}

}  // namespace singosc
