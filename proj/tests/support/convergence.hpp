#pragma once
// Strong-convergence measurement harness: integrate the same Brownian path
// at several step sizes (coarse increments are sums of the fine ones) and
// fit the slope of log2 endpoint RMS error against log2 dt. The reference
// is the same scheme at the finest step. Test-only code.

#include <cmath>
#include <cstdint>
#include <vector>

#include "sirs/rng.hpp"
#include "sirs/stepper.hpp"

namespace sirs::testsupport {

struct StrongOrderResult {
    std::vector<double> dts;
    std::vector<double> rms_error;
    double slope = 0.0;
};

/// Integrate to T with step dt = m * dt_fine, drawing the fine-grid normals
/// from `stream` and aggregating them into coarse increments.
inline State integrate_aggregated(Scheme scheme, const ModelParams& p,
                                  const NoiseIntensities& n, State s, double dt,
                                  std::size_t n_steps, std::size_t m,
                                  const rng::PathStream& stream) {
    const kernels::StepCoeffs c = kernels::StepCoeffs::make(p, n, dt);
    const double inv = 1.0 / std::sqrt(static_cast<double>(m));
    std::uint64_t fine_k = 0;
    for (std::size_t k = 0; k < n_steps; ++k) {
        double agg[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t j = 0; j < m; ++j, ++fine_k) {
            const auto xi = stream.normals(fine_k);
            agg[0] += xi[0];
            agg[1] += xi[1];
            agg[2] += xi[2];
            agg[3] += xi[3];
        }
        s = step_stochastic(scheme, s, c, agg[0] * inv, agg[1] * inv, agg[2] * inv,
                            agg[3] * inv);
    }
    return s;
}

inline StrongOrderResult strong_order(Scheme scheme, const ModelParams& p,
                                      const NoiseIntensities& n, const State& initial,
                                      double t_final, const std::vector<double>& dts,
                                      double dt_ref, std::size_t n_paths,
                                      std::uint64_t seed) {
    StrongOrderResult res;
    res.dts = dts;
    res.rms_error.assign(dts.size(), 0.0);

    const auto ref_steps = static_cast<std::size_t>(std::llround(t_final / dt_ref));
    for (std::size_t path = 0; path < n_paths; ++path) {
        const rng::PathStream stream(seed, path);
        const State ref =
            integrate_aggregated(scheme, p, n, initial, dt_ref, ref_steps, 1, stream);
        for (std::size_t lev = 0; lev < dts.size(); ++lev) {
            const auto m = static_cast<std::size_t>(std::llround(dts[lev] / dt_ref));
            const auto steps = static_cast<std::size_t>(std::llround(t_final / dts[lev]));
            const State got =
                integrate_aggregated(scheme, p, n, initial, dts[lev], steps, m, stream);
            const double dx = got.x - ref.x, dy = got.y - ref.y, dz = got.z - ref.z;
            res.rms_error[lev] += dx * dx + dy * dy + dz * dz;
        }
    }
    for (double& e : res.rms_error) e = std::sqrt(e / static_cast<double>(n_paths));

    // least-squares slope of log2(error) on log2(dt)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double cnt = static_cast<double>(dts.size());
    for (std::size_t i = 0; i < dts.size(); ++i) {
        const double lx = std::log2(dts[i]);
        const double ly = std::log2(res.rms_error[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    res.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    return res;
}

}  // namespace sirs::testsupport
