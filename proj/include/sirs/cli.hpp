#pragma once
// Subcommand implementations behind the command-line front end. Exit codes:
// 0 success, 2 config/validation error, 3 runtime abort. Condition verdicts
// are data, not errors, and never affect exit codes.

#include <iosfwd>
#include <string>
#include <vector>

#include "sirs/config.hpp"

namespace sirs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeAbort = 3;

inline constexpr const char* kVersion = "0.1.0";

/// Output directory precedence: explicit --out flag, then the
/// SIRS_OUT_DIR environment variable, then the config's output.dir.
std::string resolve_out_dir(const std::string& cli_out, const std::string& config_out);

/// Print R0, equilibria and all condition reports. Writes a report file
/// only when an output directory is set.
int cmd_check(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// One trajectory CSV per requested scheme plus a manifest.
int cmd_simulate(const RunSpec& spec, const std::vector<Scheme>& schemes, std::ostream& out,
                 std::ostream& err);

/// Ensemble statistics report, per-path CSV, histogram dumps, manifest.
int cmd_ensemble(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Check (and optionally a reduced ensemble) per sweep value; long-format
/// CSV keyed by (axis, value) with threshold crossings summarized at the end.
int cmd_sweep(const RunSpec& spec, const std::string& axis, const std::vector<double>& values,
              std::size_t ensemble_paths, std::ostream& out, std::ostream& err);

}  // namespace sirs
