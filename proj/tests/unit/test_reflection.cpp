#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "singosc/profile.hpp"
#include "singosc/reflection.hpp"

using singosc::AsymptoteError;
using singosc::compute_rho;
using singosc::FrequencyProfile;
using singosc::ParseError;
using singosc::RangeError;
using singosc::rho_sudden;
using singosc::SolverSettings;
using singosc::WronskianError;

namespace {

// Analytic reflection parameter of the tanh-in-omega^2 profile
// ("Eckart/Epstein step"): sinh^2(pi tau (w+ - w-)/2) /
// sinh^2(pi tau (w+ + w-)/2); frozen high-precision evaluations below.
constexpr double kRhoTanh112 = 0.001709806988986919985;   // tau=1, 1 -> 2
constexpr double kRhoTanhHalf13 = 0.03970789829501583121;  // tau=0.5, 1 -> 3

std::string write_temp_table(const std::vector<std::pair<double, double>>& s,
                             const char* name) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream out(path);
  out << "# t omega\n";
  for (const auto& [t, w] : s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", t, w);
    out << buf;
  }
  return path;
}

}  // namespace

TEST_CASE("rho_sudden closed form") {
  CHECK(rho_sudden(1.0, 1.0) == 0.0);
  CHECK(rho_sudden(1.0, 3.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(rho_sudden(2.0, 1.0) ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(rho_sudden(1.0, 3.0) ==
        doctest::Approx(rho_sudden(3.0, 1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(rho_sudden(0.0, 1.0), RangeError);
}

TEST_CASE("constant profile reflects nothing") {
  const auto r = compute_rho(FrequencyProfile::constant(1.3, 0.0, 20.0));
  CHECK(r.rho < 1e-15);
  CHECK(std::norm(r.reflected) < 1e-15);
  CHECK(r.wronskian_defect < 1e-8);
  // |C|^2 - |D|^2 = w-/w+ = 1
  CHECK(std::norm(r.transmitted) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("tanh step reproduces the analytic reflection parameter") {
  const auto r12 =
      compute_rho(FrequencyProfile::tanh_step(1.0, 2.0, 1.0));
  CHECK(std::abs(r12.rho - kRhoTanh112) / kRhoTanh112 < 1e-8);
  CHECK(r12.wronskian_defect < 1e-8);
  CHECK(r12.solver_steps > 0);

  const auto r13 =
      compute_rho(FrequencyProfile::tanh_step(1.0, 3.0, 0.5));
  CHECK(std::abs(r13.rho - kRhoTanhHalf13) / kRhoTanhHalf13 < 1e-8);
}

TEST_CASE("adiabatic suppression at large tau") {
  const auto r = compute_rho(FrequencyProfile::tanh_step(1.0, 2.0, 20.0));
  CHECK(r.rho < 1e-6);
  CHECK(r.wronskian_defect < 1e-8);
}

TEST_CASE("smoothed jump converges to the sudden limit") {
  const double target = rho_sudden(1.0, 3.0);
  double prev_err = 0.0;
  for (const double width : {8e-4, 4e-4, 2e-4}) {
    const auto r =
        compute_rho(FrequencyProfile::sudden_jump(1.0, 3.0, 0.0, width));
    const double err = std::abs(r.rho - target);
    if (prev_err > 0.0) {
      // at least first-order convergence in the width (observed: second)
      CHECK(err / prev_err < 0.6);
    }
    prev_err = err;
  }
  CHECK(prev_err < 1e-6);
}

TEST_CASE("rho is invariant under time translation and asymptote swap") {
  const auto base = compute_rho(FrequencyProfile::tanh_step(1.0, 2.0, 1.0));
  const auto shifted =
      compute_rho(FrequencyProfile::tanh_step(1.0, 2.0, 1.0, 7.25));
  CHECK(std::abs(base.rho - shifted.rho) < 1e-8);

  const auto swapped =
      compute_rho(FrequencyProfile::tanh_step(2.0, 1.0, 1.0));
  CHECK(std::abs(base.rho - swapped.rho) < 1e-8);
}

TEST_CASE("step-halving self-convergence") {
  SolverSettings coarse = SolverSettings::classical();
  coarse.max_step = 0.2;
  SolverSettings fine = coarse;
  fine.max_step = 0.1;
  const auto profile = FrequencyProfile::tanh_step(1.0, 2.0, 1.0);
  const auto r1 = compute_rho(profile, coarse);
  const auto r2 = compute_rho(profile, fine);
  CHECK(std::abs(r1.rho - r2.rho) < 1e-8);
}

TEST_CASE("wronskian gate fires on a deliberately sloppy integration") {
  SolverSettings sloppy = SolverSettings::classical();
  sloppy.rel_tol = 1e-2;
  sloppy.abs_tol = 1e-4;
  sloppy.max_refinements = 0;
  sloppy.max_step = 3.0;
  CHECK_THROWS_AS(
      compute_rho(FrequencyProfile::tanh_step(1.0, 2.0, 1.0), sloppy),
      WronskianError);
}

TEST_CASE("tolerance refinement rescues a sloppy first attempt") {
  SolverSettings sloppy = SolverSettings::classical();
  sloppy.rel_tol = 1e-2;
  sloppy.abs_tol = 1e-4;
  sloppy.max_refinements = 5;
  const auto r =
      compute_rho(FrequencyProfile::tanh_step(1.0, 2.0, 1.0), sloppy);
  CHECK(r.wronskian_defect < 1e-8);
}

TEST_CASE("table profile: ingestion, interpolation, reflection") {
  // sample the standard tanh step densely and feed it back as a table
  const auto exact = FrequencyProfile::tanh_step(1.0, 2.0, 1.0);
  std::vector<std::pair<double, double>> samples;
  const int count = 2000;
  for (int i = 0; i <= count; ++i) {
    const double t =
        exact.t_start() + (exact.t_end() - exact.t_start()) * i / count;
    samples.emplace_back(t, exact.omega(t));
  }
  const std::string path = write_temp_table(samples, "singosc_tanh.dat");
  const auto profile = FrequencyProfile::load_table(path);
  CHECK(profile.omega_minus() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(profile.omega_plus() == doctest::Approx(2.0).epsilon(1e-8));
  const auto r = compute_rho(profile);
  CHECK(std::abs(r.rho - kRhoTanh112) / kRhoTanh112 < 1e-3);
  std::remove(path.c_str());
}

TEST_CASE("table parser rejects malformed input") {
  {
    const std::string path =
        write_temp_table({{0.0, 1.0}, {1.0, 1.5}, {1.0, 2.0}}, "singosc_dup.dat");
    CHECK_THROWS_AS(FrequencyProfile::load_table(path), ParseError);
    std::remove(path.c_str());
  }
  {
    std::ofstream out("/tmp/singosc_bad.dat");
    out << "0.0 1.0\n0.5\n";
    out.close();
    CHECK_THROWS_AS(FrequencyProfile::load_table("/tmp/singosc_bad.dat"),
                    ParseError);
    std::remove("/tmp/singosc_bad.dat");
  }
  CHECK_THROWS_AS(FrequencyProfile::load_table("/tmp/does_not_exist.dat"),
                  ParseError);
}

TEST_CASE("asymptote guard rejects a profile that ends mid-ramp") {
  // tanh sampled only to t = +1.5 tau: omega is still rising at the end
  std::vector<std::pair<double, double>> samples;
  const auto exact = FrequencyProfile::tanh_step(1.0, 2.0, 1.0);
  for (double t = -25.0; t <= 1.5; t += 0.05) {
    samples.emplace_back(t, exact.omega(t));
  }
  const auto profile = FrequencyProfile::table(samples);
  CHECK_THROWS_AS(compute_rho(profile), AsymptoteError);
}

TEST_CASE("piecewise-linear profile with flat ends is accepted") {
  const auto profile = FrequencyProfile::piecewise_linear(
      {{-30.0, 1.0}, {-1.0, 1.0}, {1.0, 2.0}, {30.0, 2.0}});
  const auto r = compute_rho(profile);
  CHECK(r.rho > 0.0);
  CHECK(r.rho < 1.0);
  CHECK(r.wronskian_defect < 1e-8);
}
