#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace singosc_test {

// Taylor coefficients c_0..c_max of an analytic function around z = 0 by
// trapezoidal quadrature of the Cauchy integral on the circle |z| = r
// (equivalently, a DFT of the samples).  For a radius inside the nearest
// singularity and well above machine-noise amplification (r not too
// small), the result is accurate to ~1e-13 with a modest sample count.
inline std::vector<double> taylor_coefficients(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    int max_order, double radius = 0.9, int samples = 256) {
  std::vector<std::complex<double>> values(samples);
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * M_PI * k / samples;
    const std::complex<double> z =
        radius * std::complex<double>(std::cos(theta), std::sin(theta));
    values[k] = f(z);
  }
  std::vector<double> coeffs(max_order + 1);
  for (int n = 0; n <= max_order; ++n) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < samples; ++k) {
      const double theta = 2.0 * M_PI * k * n / samples;
      acc += values[k] *
             std::complex<double>(std::cos(theta), -std::sin(theta));
    }
    coeffs[n] = (acc / static_cast<double>(samples)).real() /
                std::pow(radius, n);
  }
  return coeffs;
}

}  // namespace singosc_test
