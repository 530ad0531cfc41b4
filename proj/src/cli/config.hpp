#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singosc/errors.hpp"
#include "singosc/model.hpp"
#include "singosc/profile.hpp"

namespace singosc::cli {

// Flat key-value store for `[section]`-style config text merged with
// command-line overrides.  Keys are "section.name"; each key remembers
// where it came from so validation messages can point at a line.
struct ConfigMap {
  std::string source = "<flags>";
  std::map<std::string, std::string> values;
  std::map<std::string, int> lines;  // 0 = command-line flag

  void set(const std::string& key, const std::string& value, int line = 0);
  bool has(const std::string& key) const;
  std::string where(const std::string& key) const;

  std::optional<std::string> get_string(const std::string& key) const;
  std::optional<double> get_real(const std::string& key) const;
  std::optional<long long> get_int(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
};

// Parses INI-like text (`[section]`, `key = value`, `#`/`;` comments).
// Unknown sections or keys are rejected so typos fail fast.
ConfigMap parse_ini_text(const std::string& text, const std::string& source);
ConfigMap parse_ini_file(const std::string& path);

// Overrides win key-by-key.
void merge_overrides(ConfigMap& base, const ConfigMap& overrides);

// Fully resolved run description: validated model, optional profile,
// task parameters, output options.
struct RunConfig {
  OscillatorModel model{};
  std::optional<FrequencyProfile> profile;
  std::optional<double> rho;  // task.rho, config-checked to [0, 1)

  int m = 0;
  int n = 0;
  bool m_given = false;
  int max_m = 5;
  int max_n = 5;
  double task_omega = 1.0;
  double tail = 1e-12;
  double tol = 1e-4;
  int basis_size = 200;
  std::vector<std::complex<double>> z_points;  // default {1+0i}
  std::string which = "both";                  // gen: 0 | 1 | both

  std::string format = "csv";  // csv | tsv
  int precision = 17;
  std::string out_path;  // empty = stdout

  char separator() const { return format == "tsv" ? '\t' : ','; }
};

// Validates and converts a merged ConfigMap.  Every problem is reported
// as ParseError with the offending key and its source location.
RunConfig resolve(const ConfigMap& merged);

// Direct task.rho when present, otherwise rho computed from the profile.
double resolve_rho(const RunConfig& cfg);

}  // namespace singosc::cli
