#include "singosc/special_functions.hpp"

#include <cmath>
#include <string>

namespace singosc {

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw RangeError("log_gamma: argument must be positive, got " +
                     std::to_string(x));
  }
  return std::lgamma(x);
}

double GammaRatio::value() const { return sign * std::exp(log_value); }

GammaRatio gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw RangeError("gamma_ratio: arguments must be positive, got a=" +
                     std::to_string(a) + " b=" + std::to_string(b));
  }
  const double diff = a - b;
  const long long k = std::llround(diff);
  if (k >= 0 && k <= 1000 && std::abs(diff - static_cast<double>(k)) <= 1e-9) {
    // Gamma(b+k)/Gamma(b) = b (b+1) ... (b+k-1), accumulated in log form.
    double log_value = 0.0;
    for (long long i = 0; i < k; ++i) {
      log_value += std::log(b + static_cast<double>(i));
    }
    return GammaRatio{log_value, +1};
  }
  return GammaRatio{log_gamma(a) - log_gamma(b), +1};
}

double hyp2f1_terminating(int s, double b, double c, double z) {
  if (s < 0) {
    throw RangeError("hyp2f1_terminating: series order must be >= 0, got " +
                     std::to_string(s));
  }
  // The denominator parameter c + k must not vanish for k = 0..s-1.
  for (int k = 0; k < s; ++k) {
    const double ck = c + static_cast<double>(k);
    if (std::abs(ck) < 1e-12) {
      throw RangeError(
          "hyp2f1_terminating: lower parameter hits a pole before the "
          "series terminates (c=" +
          std::to_string(c) + ", s=" + std::to_string(s) + ")");
    }
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < s; ++k) {
    const double kk = static_cast<double>(k);
    term *= (kk - static_cast<double>(s)) * (b + kk) /
            ((c + kk) * (kk + 1.0)) * z;
    sum += term;
  }
  return sum;
}

double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) {
    throw RangeError("jacobi_p: degree must be >= 0, got " +
                     std::to_string(n));
  }
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw RangeError("jacobi_p: requires alpha > -1 and beta > -1, got alpha=" +
                     std::to_string(alpha) + " beta=" + std::to_string(beta));
  }
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = 0.5 * (alpha - beta + (alpha + beta + 2.0) * x);
  for (int m = 2; m <= n; ++m) {
    const double mm = static_cast<double>(m);
    const double apb = alpha + beta;
    const double a1 = 2.0 * mm * (mm + apb) * (2.0 * mm + apb - 2.0);
    const double a2 = (2.0 * mm + apb - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (2.0 * mm + apb - 2.0) * (2.0 * mm + apb - 1.0) *
                      (2.0 * mm + apb);
    const double a4 =
        2.0 * (mm + alpha - 1.0) * (mm + beta - 1.0) * (2.0 * mm + apb);
    const double p_next = ((a2 + a3 * x) * p - a4 * p_prev) / a1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

}  // namespace singosc
