#pragma once
// Structured text reports. Constants are printed at 17 significant digits
// so reports round-trip losslessly.

#include <string>

#include "sirs/conditions.hpp"
#include "sirs/config.hpp"
#include "sirs/ensemble.hpp"

namespace sirs {

/// R0, equilibria, ellipticity constant and the three condition reports.
std::string render_check_report(const RunSpec& spec);

/// Ensemble statistics plus the applicable verdict lines.
std::string render_ensemble_report(const RunSpec& spec, const EnsembleConfig& cfg,
                                   const EnsembleStats& stats);

}  // namespace sirs
