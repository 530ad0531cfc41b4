#include <CLI11.hpp>

#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include "../src/cli/commands.hpp"
#include "../src/cli/config.hpp"
#include "singosc/errors.hpp"

namespace {

int fail(const char* category, const std::exception& e, int code) {
  std::cerr << "error: " << category << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace singosc;
  using namespace singosc::cli;

  CLI::App app{
      "singosc: transition probabilities of the singular oscillator with "
      "time-dependent frequency"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "INI config file");

  ConfigMap overrides;
  auto opt = [&overrides](CLI::App* sub, const std::string& flag,
                          const std::string& key, const std::string& desc) {
    sub->add_option_function<std::string>(
        flag,
        [&overrides, key](const std::string& v) { overrides.set(key, v); },
        desc);
  };
  auto flag = [&overrides](CLI::App* sub, const std::string& name,
                           const std::string& key, const std::string& desc) {
    sub->add_flag_callback(
        name, [&overrides, key]() { overrides.set(key, "true"); }, desc);
  };

  auto add_output_opts = [&](CLI::App* sub) {
    opt(sub, "--format", "output.format", "csv or tsv");
    opt(sub, "--out", "output.out", "write to file instead of stdout");
    opt(sub, "--precision", "output.precision", "significant digits (1-17)");
  };
  auto add_model_opts = [&](CLI::App* sub) {
    opt(sub, "--g", "model.g", "coupling constant g (> -1)");
    flag(sub, "--allow-boundary", "model.allow_boundary",
         "admit the g = -1 boundary case");
  };
  auto add_profile_opts = [&](CLI::App* sub) {
    opt(sub, "--kind", "profile.kind",
        "constant | sudden_jump | tanh_step | table | piecewise_linear");
    opt(sub, "--omega", "profile.omega", "frequency (constant profile)");
    opt(sub, "--omega-minus", "profile.omega_minus", "initial asymptote");
    opt(sub, "--omega-plus", "profile.omega_plus", "final asymptote");
    opt(sub, "--tau", "profile.tau", "tanh switching timescale");
    opt(sub, "--t0", "profile.t0", "switching midpoint");
    opt(sub, "--width", "profile.width", "sudden-jump smoothing width");
    opt(sub, "--profile-file", "profile.path", "table profile `t omega` file");
    opt(sub, "--points", "profile.points",
        "piecewise-linear `t:omega` points");
  };
  auto add_rho_opt = [&](CLI::App* sub) {
    opt(sub, "--rho", "task.rho", "reflection parameter taken directly");
  };

  CLI::App* c_rho = app.add_subcommand(
      "rho", "compute the reflection parameter from a profile");
  add_profile_opts(c_rho);
  add_output_opts(c_rho);

  CLI::App* c_levels =
      app.add_subcommand("levels", "instantaneous spectrum E_n");
  add_model_opts(c_levels);
  opt(c_levels, "--omega", "task.omega", "frequency omega > 0");
  opt(c_levels, "--max-n", "task.max_n", "highest level");
  add_output_opts(c_levels);

  CLI::App* c_wmn =
      app.add_subcommand("wmn", "single transition probability w_mn");
  add_model_opts(c_wmn);
  add_profile_opts(c_wmn);
  add_rho_opt(c_wmn);
  opt(c_wmn, "--m", "task.m", "initial level");
  opt(c_wmn, "--n", "task.n", "final level");
  add_output_opts(c_wmn);

  CLI::App* c_table =
      app.add_subcommand("table", "transition-probability table as CSV");
  add_model_opts(c_table);
  add_profile_opts(c_table);
  add_rho_opt(c_table);
  opt(c_table, "--m", "task.m", "emit a single row for this level");
  opt(c_table, "--max-m", "task.max_m", "highest row");
  opt(c_table, "--max-n", "task.max_n", "highest column");
  add_output_opts(c_table);

  CLI::App* c_gen =
      app.add_subcommand("gen", "generating functions G0/G1 on a z grid");
  add_model_opts(c_gen);
  add_profile_opts(c_gen);
  add_rho_opt(c_gen);
  opt(c_gen, "--z", "task.z", "z points, `re` or `re,im`, space separated");
  opt(c_gen, "--which", "task.which", "0, 1 or both");
  add_output_opts(c_gen);

  CLI::App* c_inv =
      app.add_subcommand("invariant", "adiabatic-invariant ratio");
  add_model_opts(c_inv);
  add_profile_opts(c_inv);
  add_rho_opt(c_inv);
  opt(c_inv, "--m", "task.m", "initial level");
  opt(c_inv, "--tail", "task.tail", "row tail target for the diagnostic");
  add_output_opts(c_inv);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "closed forms vs truncated-basis propagation");
  add_model_opts(c_verify);
  add_profile_opts(c_verify);
  opt(c_verify, "--max-m", "task.max_m", "highest initial level");
  opt(c_verify, "--max-n", "task.max_n", "highest final level");
  opt(c_verify, "--N", "task.basis_size", "basis truncation");
  opt(c_verify, "--tol", "task.tol", "acceptance threshold on max_abs_diff");
  add_output_opts(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ConfigMap merged;
    if (!config_path.empty()) merged = parse_ini_file(config_path);
    merge_overrides(merged, overrides);
    const RunConfig cfg = resolve(merged);

    if (c_rho->parsed()) return cmd_rho(cfg);
    if (c_levels->parsed()) return cmd_levels(cfg);
    if (c_wmn->parsed()) return cmd_wmn(cfg);
    if (c_table->parsed()) return cmd_table(cfg);
    if (c_gen->parsed()) return cmd_gen(cfg);
    if (c_inv->parsed()) return cmd_invariant(cfg);
    if (c_verify->parsed()) return cmd_verify(cfg);
    std::cerr << "error: config: no command selected\n";
    return 2;
  } catch (const ParseError& e) {
    return fail("config", e, 2);
  } catch (const CollapseError& e) {
    return fail("config", e, 2);
  } catch (const PoleError& e) {
    return fail("domain", e, 4);
  } catch (const RangeError& e) {
    return fail("domain", e, 4);
  } catch (const Error& e) {
    // WronskianError, AsymptoteError, NormDriftError, LeakageError,
    // TruncationError and any other solver-side failure.
    return fail("solver", e, 3);
  } catch (const std::exception& e) {
    return fail("internal", e, 1);
  }
}
