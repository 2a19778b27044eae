#pragma once
// Single-trajectory time integration: deterministic RK4 plus the stochastic
// schemes, with a reproducible per-path random stream, positivity tracking
// and extinction detection.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sirs/kernels.hpp"
#include "sirs/model.hpp"

namespace sirs {

enum class Scheme { rk4, euler_maruyama, milstein_paper, milstein_corrected };

enum class PositivityPolicy { none, clamp_at_zero };

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);
const char* positivity_name(PositivityPolicy p);
std::optional<PositivityPolicy> positivity_from_name(const std::string& name);

/// Infected counts below this floor are treated as extinct.
inline constexpr double kExtinctionFloor = 1e-6;

struct SimConfig {
    double dt = 0.1;
    double t_final = 400.0;
    State initial{10.0, 5.0, 2.0};
    std::uint64_t seed = 1;
    Scheme scheme = Scheme::milstein_corrected;
    PositivityPolicy positivity = PositivityPolicy::clamp_at_zero;

    std::size_t n_steps() const;  // ceil(t_final / dt)
    std::vector<std::string> validate() const;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    /// First step at which a component left the open positive octant,
    /// with the component index (0=x, 1=y, 2=z).
    std::optional<std::pair<std::size_t, int>> first_nonpositive;
    /// Time at which the infected count first dropped below the floor.
    std::optional<double> extinct_at;
    /// Step index that produced a non-finite state; the trajectory is
    /// truncated at the last finite state.
    std::optional<std::size_t> aborted_at_step;

    bool aborted() const { return aborted_at_step.has_value(); }
};

/// One classical fourth-order Runge-Kutta step of the deterministic field.
State step_rk4(const State& s, const ModelParams& p, double dt);

/// One step of the selected stochastic scheme (xi are the four N(0,1) draws).
State step_stochastic(Scheme scheme, const State& s, const kernels::StepCoeffs& c, double xi1,
                      double xi2, double xi3, double xi4);

/// Integrate one path. The random stream is derived from (config.seed,
/// path_index); identical inputs give bit-identical trajectories.
Trajectory simulate(const SimConfig& config, const ModelParams& p, const NoiseIntensities& n,
                    std::uint64_t path_index = 0);

}  // namespace sirs
