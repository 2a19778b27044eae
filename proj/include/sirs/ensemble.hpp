#pragma once
// Monte Carlo ensemble engine. Runs many independent trajectories through
// the runtime-selected batch kernels and accumulates the statistics that
// make the parametric conditions numerically checkable: mean-square
// deviations from the equilibria, per-path growth-rate estimates for the
// infected compartment, extinction frequency, two-window state histograms
// and the range of the total population.
//
// Every path draws from its own (seed, path index) substream and partial
// results are merged in path order, so the statistics are bit-identical
// regardless of thread count or scheduling.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sirs/conditions.hpp"
#include "sirs/histogram.hpp"
#include "sirs/model.hpp"
#include "sirs/stepper.hpp"

namespace sirs {

struct EnsembleConfig {
    std::size_t n_paths = 1;
    SimConfig sim;
    double burn_in = 0.0;  // statistics accumulate from this time on
    std::size_t histogram_bins = 20;
    double window_split = 0.5;  // fraction splitting the post-burn-in span
    unsigned threads = 0;       // 0 = hardware concurrency

    std::vector<std::string> validate() const;
};

struct PathSummary {
    std::optional<double> lyapunov_slope;
    std::optional<double> extinct_at;
    std::optional<std::pair<std::size_t, int>> first_nonpositive;
    bool aborted = false;
};

struct EnsembleStats {
    std::size_t n_paths = 0;
    std::size_t aborted_paths = 0;

    /// Time-and-ensemble average of (X - lambda/mu)^2 + Y^2 + Z^2.
    double dfe_ms_average = 0.0;
    /// Same centered at the endemic equilibrium, when it exists; the w1/w2
    /// values are the two post-burn-in window means.
    std::optional<double> ee_ms_average;
    std::optional<double> ee_ms_w1;
    std::optional<double> ee_ms_w2;

    /// Least-squares slope of ln Y(t) per path; ensemble mean and normal
    /// 95% half-width over the paths that produced a slope.
    std::optional<double> lyapunov_mean;
    std::optional<double> lyapunov_half_width;
    std::size_t lyapunov_paths = 0;

    double extinction_fraction = 0.0;

    Histogram3 hist_w1;
    Histogram3 hist_w2;

    double n_min = 0.0;
    double n_max = 0.0;

    double t_split = 0.0;

    std::vector<PathSummary> paths;
};

EnsembleStats run_ensemble(const EnsembleConfig& cfg, const ModelParams& p,
                           const NoiseIntensities& n);

/// Total-variation distance between the two window histograms; small values
/// evidence a time-stationary law. Throws if either window has no samples.
double stationary_distance(const EnsembleStats& stats);

enum class Verdict { pass, fail, inapplicable };

const char* verdict_name(Verdict v);

struct BoundCheck {
    Verdict verdict = Verdict::inapplicable;
    double observed = 0.0;
    double limit = 0.0;
};

/// dfe_ms_average <= bound * (1 + tolerance), with a 1e-3 floor for the
/// degenerate sigma1 == 0 bound.
BoundCheck dfe_bound_check(const EnsembleStats& stats, const DfeBoundReport& report,
                           double tolerance = 0.1);

/// n_min > 0 and n_max < 10 * max(N(0), lambda/mu).
BoundCheck boundedness_check(const EnsembleStats& stats, const EnsembleConfig& cfg,
                             const ModelParams& p);

}  // namespace sirs
