#pragma once
// Run specification: flat key-value config files with dotted sections
// (model.beta, noise.sigma4, sim.dt, ensemble.n_paths), named presets for
// the standard simulation regimes, and validation that reports every
// violated field.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sirs/ensemble.hpp"
#include "sirs/model.hpp"
#include "sirs/stepper.hpp"

namespace sirs {

namespace detail {
inline constexpr double kUnsetParam = std::numeric_limits<double>::quiet_NaN();
}

struct RunSpec {
    // model rates have no defaults; a config (or preset) must supply them
    ModelParams params{detail::kUnsetParam, detail::kUnsetParam, detail::kUnsetParam,
                       detail::kUnsetParam, detail::kUnsetParam, detail::kUnsetParam};
    NoiseIntensities noise{0.0, 0.0, 0.0, 0.0};
    SimConfig sim;
    std::optional<EnsembleConfig> ensemble;  // sim template mirrors `sim`
    std::string out_dir;

    /// Every violated field, not just the first.
    std::vector<std::string> validate() const;

    /// Ensemble config backed by this spec's sim block (defaults if the
    /// config had no ensemble section).
    EnsembleConfig ensemble_or_default() const;
};

struct ParseResult {
    RunSpec spec;
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

/// Parse `key = value` lines ('#' starts a comment). Unknown keys and
/// malformed values are all reported.
ParseResult parse_config_text(const std::string& text, const RunSpec& base = RunSpec{});

ParseResult parse_config_file(const std::string& path, const RunSpec& base = RunSpec{});

/// Canonical serialization: fixed key order, round-trip decimals. Hashing
/// this string fingerprints the run.
std::string serialize_config(const RunSpec& spec);

/// Named regime presets ("fig1".."fig8" and the "b" variants "fig3b".."fig8b").
std::optional<RunSpec> preset(const std::string& name);
std::vector<std::string> preset_names();

/// Set a single dotted key (used by parameter sweeps). Returns an error
/// message on unknown key.
std::optional<std::string> apply_key(RunSpec& spec, const std::string& key, double value);

}  // namespace sirs
