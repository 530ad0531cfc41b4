#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "singosc/propagation.hpp"
#include "singosc/reflection.hpp"
#include "singosc/settings.hpp"
#include "singosc/transitions.hpp"

namespace singosc::cli {

namespace {

// Deterministic numeric rendering: fixed significant digits, C locale
// semantics of printf, LF endings.  17 digits round-trip doubles.
std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

class Sink {
 public:
  explicit Sink(const RunConfig& cfg) {
    if (!cfg.out_path.empty()) {
      file_.open(cfg.out_path, std::ios::binary);
      if (!file_) {
        throw ParseError("output.out: cannot open '" + cfg.out_path + "'");
      }
      os_ = &file_;
    } else {
      os_ = &std::cout;
    }
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

const FrequencyProfile& require_profile(const RunConfig& cfg) {
  if (!cfg.profile) {
    throw ParseError(
        "config: a [profile] section (or profile flags) is required for "
        "this command");
  }
  return *cfg.profile;
}

}  // namespace

int cmd_rho(const RunConfig& cfg) {
  const ReflectionResult r = compute_rho(require_profile(cfg));
  Sink sink(cfg);
  const int p = cfg.precision;
  sink.os() << "rho=" << fmt(r.rho, p) << "\n"
            << "abs_C2=" << fmt(std::norm(r.transmitted), p) << "\n"
            << "abs_D2=" << fmt(std::norm(r.reflected), p) << "\n"
            << "wronskian_defect=" << fmt(r.wronskian_defect, p) << "\n"
            << "solver_steps=" << r.solver_steps << "\n";
  return 0;
}

int cmd_levels(const RunConfig& cfg) {
  Sink sink(cfg);
  const char sep = cfg.separator();
  sink.os() << "n" << sep << "E\n";
  for (int n = 0; n <= cfg.max_n; ++n) {
    sink.os() << n << sep
              << fmt(energy_level(cfg.model, n, cfg.task_omega),
                     cfg.precision)
              << "\n";
  }
  return 0;
}

int cmd_wmn(const RunConfig& cfg) {
  const double rho = resolve_rho(cfg);
  const double w = transition_probability(cfg.model, cfg.m, cfg.n, rho);
  Sink sink(cfg);
  sink.os() << "w=" << fmt(w, cfg.precision) << "\n";
  return 0;
}

int cmd_table(const RunConfig& cfg) {
  const double rho = resolve_rho(cfg);
  const int m_lo = cfg.m_given ? cfg.m : 0;
  const int m_hi = cfg.m_given ? cfg.m : cfg.max_m;
  Sink sink(cfg);
  const char sep = cfg.separator();
  sink.os() << "m" << sep << "n" << sep << "w\n";
  std::vector<std::pair<int, double>> tails;
  for (int m = m_lo; m <= m_hi; ++m) {
    double row_sum = 0.0;
    for (int n = 0; n <= cfg.max_n; ++n) {
      const double w = transition_probability(cfg.model, m, n, rho);
      row_sum += w;
      if (w == 0.0) continue;  // sparse triplet form
      sink.os() << m << sep << n << sep << fmt(w, cfg.precision) << "\n";
    }
    tails.emplace_back(m, 1.0 - row_sum);
  }
  for (const auto& [m, tail] : tails) {
    sink.os() << "# tail_mass m=" << m << " " << fmt(tail, cfg.precision)
              << "\n";
  }
  return 0;
}

int cmd_gen(const RunConfig& cfg) {
  const double rho = resolve_rho(cfg);
  Sink sink(cfg);
  const char sep = cfg.separator();
  const int p = cfg.precision;
  sink.os() << "m" << sep << "re_z" << sep << "im_z" << sep << "re_g" << sep
            << "im_g\n";
  std::vector<int> which;
  if (cfg.which == "0" || cfg.which == "both") which.push_back(0);
  if (cfg.which == "1" || cfg.which == "both") which.push_back(1);
  for (const int m : which) {
    for (const auto& z : cfg.z_points) {
      const std::complex<double> gm = m == 0 ? generating_g0(cfg.model, rho, z)
                                             : generating_g1(cfg.model, rho, z);
      sink.os() << m << sep << fmt(z.real(), p) << sep << fmt(z.imag(), p)
                << sep << fmt(gm.real(), p) << sep << fmt(gm.imag(), p)
                << "\n";
    }
  }
  return 0;
}

int cmd_invariant(const RunConfig& cfg) {
  const double rho = resolve_rho(cfg);
  const double closed = adiabatic_invariant_ratio(cfg.model, cfg.m, rho);
  const InvariantDiagnostic diag =
      mean_excitation_diagnostic(cfg.model, cfg.m, rho, cfg.tail);
  Sink sink(cfg);
  const int p = cfg.precision;
  sink.os() << "closed_form=" << fmt(closed, p) << "\n"
            << "summed=" << fmt(diag.summed_ratio, p) << "\n"
            << "residual=" << fmt(diag.residual, p) << "\n"
            << "terms=" << diag.terms << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const FrequencyProfile& profile = require_profile(cfg);
  SolverSettings settings = SolverSettings::schrodinger();
  settings.basis_size = cfg.basis_size;
  const OracleReport report =
      compare(cfg.model, profile, cfg.max_m, cfg.max_n, settings);
  const bool pass = report.max_abs_diff <= cfg.tol;
  Sink sink(cfg);
  const int p = cfg.precision;
  sink.os() << "rho=" << fmt(report.rho, p) << "\n"
            << "N=" << report.truncation << "\n"
            << "max_abs_diff=" << fmt(report.max_abs_diff, p) << "\n"
            << "leakage=" << fmt(report.leakage, p) << "\n"
            << "tol=" << fmt(cfg.tol, p) << "\n"
            << "status=" << (pass ? "pass" : "fail") << "\n";
  if (!pass) {
    std::cerr << "error: oracle: max_abs_diff "
              << fmt(report.max_abs_diff, p) << " exceeds tol "
              << fmt(cfg.tol, p) << "\n";
    return 3;
  }
  return 0;
}

}  // namespace singosc::cli
