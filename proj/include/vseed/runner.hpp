// Experiment orchestration for the CLI: execute a config, validate one, or
// audit a finished run directory against its own snapshots.

#pragma once

#include <string>

#include "vseed/config.hpp"
#include "vseed/nse.hpp"

namespace vseed {

inline constexpr const char* kVersion = "vseed 0.1.0";

/// Exit codes shared by the CLI verbs: 0 pass, 2 assertion failure,
/// 1 solver/config error.
int run_config(const std::string& config_path, bool force_sweep = false);
int validate_config(const std::string& config_path);
int audit_rundir(const std::string& rundir);

/// Analytic divergence-free body forces selectable from configs.
Forcing make_forcing(const ExperimentConfig& cfg);

/// Output root, honoring the VSEED_OUT override.
std::string effective_output_dir(const ExperimentConfig& cfg);

}  // namespace vseed
