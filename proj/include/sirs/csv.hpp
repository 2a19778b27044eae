#pragma once
// Text output helpers: decimal formatting, trajectory CSV, manifests and a
// small FNV-1a hash for config fingerprints.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sirs/stepper.hpp"

namespace sirs {

/// Shortest decimal representation that round-trips to the same double.
std::string fmt_shortest(double v);

/// 17 significant digits (always round-trips).
std::string fmt_g17(double v);

/// Trajectory as CSV: header t,x,y,z, one row per grid point, 17
/// significant digits.
std::string trajectory_csv(const Trajectory& traj);

/// FNV-1a 64-bit hash of a string.
std::uint64_t fnv1a64(const std::string& text);

/// key = value lines, in the given order.
std::string manifest_text(const std::vector<std::pair<std::string, std::string>>& entries);

/// Write a file, creating parent directories. Throws std::runtime_error on
/// I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace sirs
