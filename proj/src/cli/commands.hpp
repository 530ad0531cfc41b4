#pragma once

#include "config.hpp"

namespace singosc::cli {

// Each command renders to cfg.out_path (or stdout) and returns the
// process exit code for the success path; failures are signalled through
// the library exception taxonomy and mapped to exit codes in main.
int cmd_rho(const RunConfig& cfg);
int cmd_levels(const RunConfig& cfg);
int cmd_wmn(const RunConfig& cfg);
int cmd_table(const RunConfig& cfg);
int cmd_gen(const RunConfig& cfg);
int cmd_invariant(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

}  // namespace singosc::cli
