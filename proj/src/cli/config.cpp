#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "singosc/reflection.hpp"

namespace singosc::cli {

namespace {

const std::map<std::string, std::set<std::string>> kSchema = {
    {"model", {"g", "allow_boundary"}},
    {"profile",
     {"kind", "omega", "omega_minus", "omega_plus", "tau", "t0", "width",
      "path", "points"}},
    {"task",
     {"rho", "m", "n", "max_m", "max_n", "omega", "tail", "tol",
      "basis_size", "z", "which"}},
    {"output", {"format", "precision", "out"}},
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_key(const std::string& key, const std::string& where,
                          const std::string& what) {
  throw ParseError("config: " + key + " (" + where + "): " + what);
}

}  // namespace

void ConfigMap::set(const std::string& key, const std::string& value,
                    int line) {
  values[key] = value;
  lines[key] = line;
}

bool ConfigMap::has(const std::string& key) const {
  return values.count(key) > 0;
}

std::string ConfigMap::where(const std::string& key) const {
  const auto it = lines.find(key);
  if (it == lines.end() || it->second == 0) return "flag";
  return source + ":" + std::to_string(it->second);
}

std::optional<std::string> ConfigMap::get_string(
    const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

std::optional<double> ConfigMap::get_real(const std::string& key) const {
  const auto raw = get_string(key);
  if (!raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(*raw, &used);
    if (used != raw->size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    bad_key(key, where(key), "'" + *raw + "' is not a number");
  }
}

std::optional<long long> ConfigMap::get_int(const std::string& key) const {
  const auto raw = get_string(key);
  if (!raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(*raw, &used);
    if (used != raw->size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    bad_key(key, where(key), "'" + *raw + "' is not an integer");
  }
}

std::optional<bool> ConfigMap::get_bool(const std::string& key) const {
  const auto raw = get_string(key);
  if (!raw) return std::nullopt;
  std::string v = *raw;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_key(key, where(key), "'" + *raw + "' is not a boolean");
}

ConfigMap parse_ini_text(const std::string& text, const std::string& source) {
  ConfigMap cfg;
  cfg.source = source;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError("config: " + source + ":" + std::to_string(lineno) +
                         ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (kSchema.find(section) == kSchema.end()) {
        throw ParseError("config: " + source + ":" + std::to_string(lineno) +
                         ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config: " + source + ":" + std::to_string(lineno) +
                       ": expected `key = value`");
    }
    if (section.empty()) {
      throw ParseError("config: " + source + ":" + std::to_string(lineno) +
                       ": key outside any [section]");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (kSchema.at(section).count(key) == 0) {
      throw ParseError("config: " + source + ":" + std::to_string(lineno) +
                       ": unknown key '" + key + "' in [" + section + "]");
    }
    cfg.set(section + "." + key, value, lineno);
  }
  return cfg;
}

ConfigMap parse_ini_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("config: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ini_text(buf.str(), path);
}

void merge_overrides(ConfigMap& base, const ConfigMap& overrides) {
  for (const auto& [key, value] : overrides.values) {
    base.set(key, value, overrides.lines.at(key));
  }
}

namespace {

std::vector<std::pair<double, double>> parse_points(const std::string& text,
                                                    const std::string& key,
                                                    const std::string& where) {
  std::vector<std::pair<double, double>> pts;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      bad_key(key, where, "point '" + token + "' is not `t:omega`");
    }
    try {
      pts.emplace_back(std::stod(token.substr(0, colon)),
                       std::stod(token.substr(colon + 1)));
    } catch (const std::exception&) {
      bad_key(key, where, "point '" + token + "' is not numeric");
    }
  }
  return pts;
}

std::vector<std::complex<double>> parse_z_list(const std::string& text,
                                               const std::string& key,
                                               const std::string& where) {
  std::vector<std::complex<double>> zs;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    try {
      const auto comma = token.find(',');
      if (comma == std::string::npos) {
        zs.emplace_back(std::stod(token), 0.0);
      } else {
        zs.emplace_back(std::stod(token.substr(0, comma)),
                        std::stod(token.substr(comma + 1)));
      }
    } catch (const std::exception&) {
      bad_key(key, where, "z value '" + token + "' is not `re` or `re,im`");
    }
  }
  return zs;
}

FrequencyProfile build_profile(const ConfigMap& c, const std::string& kind) {
  auto require_real = [&](const std::string& key) {
    const auto v = c.get_real(key);
    if (!v) {
      throw ParseError("config: " + key + ": required for profile kind '" +
                       kind + "'");
    }
    return *v;
  };
  try {
    if (kind == "constant") {
      return FrequencyProfile::constant(c.get_real("profile.omega").value_or(1.0));
    }
    if (kind == "sudden_jump") {
      return FrequencyProfile::sudden_jump(
          require_real("profile.omega_minus"),
          require_real("profile.omega_plus"),
          c.get_real("profile.t0").value_or(0.0),
          c.get_real("profile.width").value_or(1e-4));
    }
    if (kind == "tanh_step") {
      return FrequencyProfile::tanh_step(
          require_real("profile.omega_minus"),
          require_real("profile.omega_plus"),
          c.get_real("profile.tau").value_or(1.0),
          c.get_real("profile.t0").value_or(0.0));
    }
    if (kind == "table") {
      const auto path = c.get_string("profile.path");
      if (!path) {
        throw ParseError("config: profile.path: required for kind 'table'");
      }
      return FrequencyProfile::load_table(*path);
    }
    if (kind == "piecewise_linear") {
      const auto points = c.get_string("profile.points");
      if (!points) {
        throw ParseError(
            "config: profile.points: required for kind 'piecewise_linear'");
      }
      return FrequencyProfile::piecewise_linear(parse_points(
          *points, "profile.points", c.where("profile.points")));
    }
  } catch (const RangeError& e) {
    throw ParseError("config: profile (" + c.where("profile.kind") +
                     "): " + e.what());
  }
  throw ParseError("config: profile.kind (" + c.where("profile.kind") +
                   "): unknown kind '" + kind + "'");
}

int checked_int(const ConfigMap& c, const std::string& key, long long fallback,
                long long lo, long long hi) {
  const long long v = c.get_int(key).value_or(fallback);
  if (v < lo || v > hi) {
    bad_key(key, c.where(key),
            "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                "], got " + std::to_string(v));
  }
  return static_cast<int>(v);
}

double checked_positive(const ConfigMap& c, const std::string& key,
                        double fallback) {
  const double v = c.get_real(key).value_or(fallback);
  if (!(v > 0.0)) {
    bad_key(key, c.where(key), "must be positive");
  }
  return v;
}

}  // namespace

RunConfig resolve(const ConfigMap& merged) {
  RunConfig cfg;

  const double g = merged.get_real("model.g").value_or(0.0);
  const bool allow_boundary =
      merged.get_bool("model.allow_boundary").value_or(false);
  try {
    cfg.model = make_model(g, allow_boundary);
  } catch (const CollapseError& e) {
    bad_key("model.g", merged.where("model.g"), e.what());
  }

  if (const auto kind = merged.get_string("profile.kind")) {
    cfg.profile = build_profile(merged, *kind);
  }

  if (const auto rho = merged.get_real("task.rho")) {
    if (!(*rho >= 0.0) || !(*rho < 1.0)) {
      bad_key("task.rho", merged.where("task.rho"),
              "must lie in [0, 1), got " + std::to_string(*rho));
    }
    cfg.rho = *rho;
  }

  cfg.m = checked_int(merged, "task.m", 0, 0, 1000000);
  cfg.m_given = merged.has("task.m");
  cfg.n = checked_int(merged, "task.n", 0, 0, 1000000);
  cfg.max_m = checked_int(merged, "task.max_m", 5, 0, 100000);
  cfg.max_n = checked_int(merged, "task.max_n", 5, 0, 100000);
  cfg.task_omega = checked_positive(merged, "task.omega", 1.0);
  cfg.tail = checked_positive(merged, "task.tail", 1e-12);
  cfg.tol = checked_positive(merged, "task.tol", 1e-4);
  cfg.basis_size = checked_int(merged, "task.basis_size", 200, 2, 100000);

  if (const auto z = merged.get_string("task.z")) {
    cfg.z_points = parse_z_list(*z, "task.z", merged.where("task.z"));
  }
  if (cfg.z_points.empty()) cfg.z_points = {{1.0, 0.0}};

  cfg.which = merged.get_string("task.which").value_or("both");
  if (cfg.which != "0" && cfg.which != "1" && cfg.which != "both") {
    bad_key("task.which", merged.where("task.which"),
            "must be 0, 1 or both");
  }

  cfg.format = merged.get_string("output.format").value_or("csv");
  if (cfg.format != "csv" && cfg.format != "tsv") {
    bad_key("output.format", merged.where("output.format"),
            "must be csv or tsv");
  }
  cfg.precision = checked_int(merged, "output.precision", 17, 1, 17);
  cfg.out_path = merged.get_string("output.out").value_or("");
  return cfg;
}

double resolve_rho(const RunConfig& cfg) {
  if (cfg.rho) return *cfg.rho;
  if (cfg.profile) return compute_rho(*cfg.profile).rho;
  throw ParseError(
      "config: task.rho or a [profile] section is required for this "
      "command");
}

}  // namespace singosc::cli
