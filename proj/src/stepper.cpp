#include "sirs/stepper.hpp"

#include <cmath>
#include <sstream>

#include "sirs/rng.hpp"

namespace sirs {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::rk4: return "rk4";
        case Scheme::euler_maruyama: return "euler-maruyama";
        case Scheme::milstein_paper: return "milstein-paper";
        case Scheme::milstein_corrected: return "milstein-corrected";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
    if (name == "rk4") return Scheme::rk4;
    if (name == "euler-maruyama" || name == "euler") return Scheme::euler_maruyama;
    if (name == "milstein-paper") return Scheme::milstein_paper;
    if (name == "milstein-corrected" || name == "milstein") return Scheme::milstein_corrected;
    return std::nullopt;
}

const char* positivity_name(PositivityPolicy p) {
    return p == PositivityPolicy::none ? "none" : "clamp-at-zero";
}

std::optional<PositivityPolicy> positivity_from_name(const std::string& name) {
    if (name == "none") return PositivityPolicy::none;
    if (name == "clamp-at-zero" || name == "clamp") return PositivityPolicy::clamp_at_zero;
    return std::nullopt;
}

std::size_t SimConfig::n_steps() const {
    return static_cast<std::size_t>(std::ceil(t_final / dt));
}

std::vector<std::string> SimConfig::validate() const {
    std::vector<std::string> issues;
    if (!(dt > 0.0) || !std::isfinite(dt)) issues.push_back("sim.dt must be positive and finite");
    if (!(t_final >= dt) || !std::isfinite(t_final))
        issues.push_back("sim.t_final must be finite and at least one step long");
    if (!initial.admissible())
        issues.push_back("sim initial state must have x, y, z all strictly positive");
    if (dt > 0.0 && std::isfinite(t_final) && t_final / dt > 9.0e15)
        issues.push_back("sim step count does not fit the index type");
    return issues;
}

State step_rk4(const State& s, const ModelParams& p, double dt) {
    const auto k1 = drift(s, p);
    const State s2{s.x + 0.5 * dt * k1[0], s.y + 0.5 * dt * k1[1], s.z + 0.5 * dt * k1[2]};
    const auto k2 = drift(s2, p);
    const State s3{s.x + 0.5 * dt * k2[0], s.y + 0.5 * dt * k2[1], s.z + 0.5 * dt * k2[2]};
    const auto k3 = drift(s3, p);
    const State s4{s.x + dt * k3[0], s.y + dt * k3[1], s.z + dt * k3[2]};
    const auto k4 = drift(s4, p);
    const double w = dt / 6.0;
    return State{
        s.x + w * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        s.y + w * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        s.z + w * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
    };
}

State step_stochastic(Scheme scheme, const State& s, const kernels::StepCoeffs& c, double xi1,
                      double xi2, double xi3, double xi4) {
    State out = s;
    switch (scheme) {
        case Scheme::euler_maruyama:
            kernels::step_euler_one(c, out.x, out.y, out.z, xi1, xi2, xi3, xi4);
            break;
        case Scheme::milstein_paper:
            kernels::step_milstein_paper_one(c, out.x, out.y, out.z, xi1, xi2, xi3, xi4);
            break;
        case Scheme::milstein_corrected:
            kernels::step_milstein_corrected_one(c, out.x, out.y, out.z, xi1, xi2, xi3, xi4);
            break;
        case Scheme::rk4:
            break;  // handled by the caller; no draws consumed
    }
    return out;
}

Trajectory simulate(const SimConfig& config, const ModelParams& p, const NoiseIntensities& n,
                    std::uint64_t path_index) {
    const std::size_t steps = config.n_steps();
    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(config.initial);

    const rng::PathStream stream(config.seed, path_index);
    const kernels::StepCoeffs coeffs = kernels::StepCoeffs::make(p, n, config.dt);

    State s = config.initial;
    if (s.y < kExtinctionFloor) traj.extinct_at = 0.0;

    for (std::size_t k = 0; k < steps; ++k) {
        const double t_next = (k + 1 == steps) ? config.t_final
                                               : static_cast<double>(k + 1) * config.dt;
        const double h = t_next - traj.times.back();
        if (h <= 0.0) break;  // ceil() overshot by one under FP division

        if (config.scheme == Scheme::rk4) {
            s = step_rk4(s, p, h);
        } else {
            const auto xi = stream.normals(k);
            const kernels::StepCoeffs& c =
                (h == config.dt) ? coeffs : kernels::StepCoeffs::make(p, n, h);
            s = step_stochastic(config.scheme, s, c, xi[0], xi[1], xi[2], xi[3]);
        }

        if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.z)) {
            traj.aborted_at_step = k + 1;
            break;
        }
        if (!traj.first_nonpositive) {
            if (s.x <= 0.0) traj.first_nonpositive = {k + 1, 0};
            else if (s.y <= 0.0) traj.first_nonpositive = {k + 1, 1};
            else if (s.z <= 0.0) traj.first_nonpositive = {k + 1, 2};
        }
        if (config.positivity == PositivityPolicy::clamp_at_zero) {
            if (s.x < 0.0) s.x = 0.0;
            if (s.y < 0.0) s.y = 0.0;
            if (s.z < 0.0) s.z = 0.0;
        }
        if (!traj.extinct_at && s.y < kExtinctionFloor) traj.extinct_at = t_next;

        traj.times.push_back(t_next);
        traj.states.push_back(s);
    }
    return traj;
}

}  // namespace sirs
