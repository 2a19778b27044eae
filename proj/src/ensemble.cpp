#include "sirs/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "sirs/rng.hpp"

namespace sirs {

namespace {

constexpr std::size_t kBatchWidth = 16;  // paths stepped together per kernel call

/// Streaming per-path accumulator. The inclusion rules match exactly what a
/// recorded trajectory would yield: every grid point t >= burn_in counts,
/// ln Y samples stop once the extinction floor is hit.
struct PathAccum {
    double sum_dfe = 0.0;
    double sum_ee_w1 = 0.0, sum_ee_w2 = 0.0;
    std::size_t n_ms = 0, n_w1 = 0, n_w2 = 0;
    double lyap_st = 0.0, lyap_stt = 0.0, lyap_sl = 0.0, lyap_stl = 0.0;
    std::size_t lyap_n = 0;
    double n_min = std::numeric_limits<double>::infinity();
    double n_max = -std::numeric_limits<double>::infinity();
    bool extinct = false;
    double extinct_at = 0.0;
    bool nonpos = false;
    std::size_t nonpos_step = 0;
    int nonpos_comp = 0;
    bool aborted = false;
    std::size_t abort_step = 0;

    std::optional<double> slope() const {
        if (lyap_n < 2) return std::nullopt;
        const double n = static_cast<double>(lyap_n);
        const double den = n * lyap_stt - lyap_st * lyap_st;
        if (den == 0.0) return std::nullopt;
        return (n * lyap_stl - lyap_st * lyap_sl) / den;
    }
};

struct Centers {
    double dfe_x;
    bool has_ee;
    double ee_x, ee_y, ee_z;
};

struct WindowSpec {
    double burn_in;
    double t_split;
};

void accumulate_sample(PathAccum& a, double t, double x, double y, double z, const Centers& c,
                       const WindowSpec& w, HistogramCounts& h1, HistogramCounts& h2) {
    if (t < w.burn_in) return;
    const double ddfe = x - c.dfe_x;
    a.sum_dfe += ddfe * ddfe + y * y + z * z;
    a.n_ms += 1;
    const bool in_w1 = t < w.t_split;
    if (c.has_ee) {
        const double dx = x - c.ee_x, dy = y - c.ee_y, dz = z - c.ee_z;
        const double d2 = dx * dx + dy * dy + dz * dz;
        if (in_w1) {
            a.sum_ee_w1 += d2;
            a.n_w1 += 1;
        } else {
            a.sum_ee_w2 += d2;
            a.n_w2 += 1;
        }
    } else {
        if (in_w1) a.n_w1 += 1; else a.n_w2 += 1;
    }
    if (in_w1) h1.add(x, y, z); else h2.add(x, y, z);
    if (!a.extinct && y > 0.0 && y >= kExtinctionFloor) {
        const double tau = t - w.burn_in;
        const double l = std::log(y);
        a.lyap_st += tau;
        a.lyap_stt += tau * tau;
        a.lyap_sl += l;
        a.lyap_stl += tau * l;
        a.lyap_n += 1;
    }
    const double total = x + y + z;
    a.n_min = std::min(a.n_min, total);
    a.n_max = std::max(a.n_max, total);
}

/// Advance a contiguous block of paths through the whole time grid,
/// kBatchWidth paths per kernel call.
void run_block(const EnsembleConfig& cfg, const ModelParams& p, const NoiseIntensities& n,
               const Centers& centers, const WindowSpec& window, std::size_t p_begin,
               std::size_t p_end, std::vector<PathAccum>& accums, HistogramCounts& h1,
               HistogramCounts& h2) {
    const bool stochastic = cfg.sim.scheme != Scheme::rk4;
    const std::size_t steps = cfg.sim.n_steps();
    const kernels::KernelTable& kt = kernels::active();
    const kernels::StepFn step_fn = cfg.sim.scheme == Scheme::euler_maruyama
                                        ? kt.euler_maruyama
                                        : (cfg.sim.scheme == Scheme::milstein_paper
                                               ? kt.milstein_paper
                                               : kt.milstein_corrected);
    const kernels::StepCoeffs coeffs = kernels::StepCoeffs::make(p, n, cfg.sim.dt);

    for (std::size_t b0 = p_begin; b0 < p_end; b0 += kBatchWidth) {
        const std::size_t lanes = std::min(kBatchWidth, p_end - b0);
        double x[kBatchWidth], y[kBatchWidth], z[kBatchWidth];
        double xi1[kBatchWidth], xi2[kBatchWidth], xi3[kBatchWidth], xi4[kBatchWidth];
        std::vector<rng::PathStream> streams;
        streams.reserve(lanes);
        for (std::size_t l = 0; l < lanes; ++l) {
            x[l] = cfg.sim.initial.x;
            y[l] = cfg.sim.initial.y;
            z[l] = cfg.sim.initial.z;
            streams.emplace_back(cfg.sim.seed, b0 + l);
            PathAccum& a = accums[b0 + l];
            if (cfg.sim.initial.y < kExtinctionFloor) {
                a.extinct = true;
                a.extinct_at = 0.0;
            }
            accumulate_sample(a, 0.0, x[l], y[l], z[l], centers, window, h1, h2);
        }

        double t = 0.0;
        for (std::size_t k = 0; k < steps; ++k) {
            const double t_next =
                (k + 1 == steps) ? cfg.sim.t_final : static_cast<double>(k + 1) * cfg.sim.dt;
            const double h = t_next - t;
            if (h <= 0.0) break;  // ceil() overshot by one under FP division

            if (stochastic) {
                for (std::size_t l = 0; l < lanes; ++l) {
                    if (accums[b0 + l].aborted) {
                        xi1[l] = xi2[l] = xi3[l] = xi4[l] = 0.0;
                        continue;
                    }
                    const auto xi = streams[l].normals(k);
                    xi1[l] = xi[0];
                    xi2[l] = xi[1];
                    xi3[l] = xi[2];
                    xi4[l] = xi[3];
                }
                const kernels::StepCoeffs& c =
                    (h == cfg.sim.dt) ? coeffs : kernels::StepCoeffs::make(p, n, h);
                kernels::Batch batch{x, y, z, xi1, xi2, xi3, xi4, lanes};
                step_fn(c, batch);
            } else {
                for (std::size_t l = 0; l < lanes; ++l) {
                    if (accums[b0 + l].aborted) continue;
                    const State s = step_rk4(State{x[l], y[l], z[l]}, p, h);
                    x[l] = s.x;
                    y[l] = s.y;
                    z[l] = s.z;
                }
            }

            for (std::size_t l = 0; l < lanes; ++l) {
                PathAccum& a = accums[b0 + l];
                if (a.aborted) continue;
                if (!std::isfinite(x[l]) || !std::isfinite(y[l]) || !std::isfinite(z[l])) {
                    a.aborted = true;
                    a.abort_step = k + 1;
                    continue;
                }
                if (!a.nonpos) {
                    if (x[l] <= 0.0) { a.nonpos = true; a.nonpos_step = k + 1; a.nonpos_comp = 0; }
                    else if (y[l] <= 0.0) { a.nonpos = true; a.nonpos_step = k + 1; a.nonpos_comp = 1; }
                    else if (z[l] <= 0.0) { a.nonpos = true; a.nonpos_step = k + 1; a.nonpos_comp = 2; }
                }
                if (cfg.sim.positivity == PositivityPolicy::clamp_at_zero) {
                    if (x[l] < 0.0) x[l] = 0.0;
                    if (y[l] < 0.0) y[l] = 0.0;
                    if (z[l] < 0.0) z[l] = 0.0;
                }
                if (!a.extinct && y[l] < kExtinctionFloor) {
                    a.extinct = true;
                    a.extinct_at = t_next;
                }
                accumulate_sample(a, t_next, x[l], y[l], z[l], centers, window, h1, h2);
            }
            t = t_next;
        }
    }
}

}  // namespace

std::vector<std::string> EnsembleConfig::validate() const {
    std::vector<std::string> issues = sim.validate();
    if (n_paths < 1) issues.push_back("ensemble.n_paths must be at least 1");
    if (!(burn_in >= 0.0) || !(burn_in < sim.t_final))
        issues.push_back("ensemble.burn_in must satisfy 0 <= burn_in < t_final");
    if (histogram_bins < 2 || histogram_bins > 100)
        issues.push_back("ensemble.histogram_bins must be in [2, 100]");
    if (!(window_split > 0.0) || !(window_split < 1.0))
        issues.push_back("ensemble.window_split must lie strictly inside (0, 1)");
    return issues;
}

EnsembleStats run_ensemble(const EnsembleConfig& cfg, const ModelParams& p,
                           const NoiseIntensities& n) {
    {
        auto issues = cfg.validate();
        if (!issues.empty()) {
            std::string msg = "invalid ensemble config:";
            for (const auto& s : issues) msg += "\n  - " + s;
            throw std::invalid_argument(msg);
        }
    }

    const Equilibria eq = equilibria(p);
    Centers centers{};
    centers.dfe_x = eq.dfe.x;
    centers.has_ee = eq.ee.has_value();
    if (eq.ee) {
        centers.ee_x = eq.ee->x;
        centers.ee_y = eq.ee->y;
        centers.ee_z = eq.ee->z;
    }
    // Support box fixed before the run so both windows share bins.
    const State& ref = eq.ee ? *eq.ee : eq.dfe;
    const double edge = 3.0 * std::max({ref.x, ref.y, ref.z});

    WindowSpec window{cfg.burn_in, cfg.burn_in + cfg.window_split * (cfg.sim.t_final - cfg.burn_in)};

    unsigned n_workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    if (n_workers == 0) n_workers = 1;
    n_workers = static_cast<unsigned>(
        std::min<std::size_t>(n_workers, cfg.n_paths));

    std::vector<PathAccum> accums(cfg.n_paths);
    std::vector<HistogramCounts> h1(n_workers, HistogramCounts(cfg.histogram_bins, edge));
    std::vector<HistogramCounts> h2(n_workers, HistogramCounts(cfg.histogram_bins, edge));

    const std::size_t chunk = (cfg.n_paths + n_workers - 1) / n_workers;
    if (n_workers == 1) {
        run_block(cfg, p, n, centers, window, 0, cfg.n_paths, accums, h1[0], h2[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t p0 = std::min<std::size_t>(w * chunk, cfg.n_paths);
            const std::size_t p1 = std::min<std::size_t>(p0 + chunk, cfg.n_paths);
            pool.emplace_back([&, w, p0, p1] {
                run_block(cfg, p, n, centers, window, p0, p1, accums, h1[w], h2[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (unsigned w = 1; w < n_workers; ++w) {
        h1[0].merge(h1[w]);
        h2[0].merge(h2[w]);
    }

    EnsembleStats stats;
    stats.n_paths = cfg.n_paths;
    stats.t_split = window.t_split;
    stats.hist_w1 = Histogram3::normalized(h1[0]);
    stats.hist_w2 = Histogram3::normalized(h2[0]);
    stats.paths.resize(cfg.n_paths);

    double sum_dfe = 0.0, sum_ee = 0.0, sum_ee_w1 = 0.0, sum_ee_w2 = 0.0;
    std::size_t valid = 0, valid_w1 = 0, valid_w2 = 0, extinct = 0;
    double nmin = std::numeric_limits<double>::infinity();
    double nmax = -std::numeric_limits<double>::infinity();
    std::vector<double> slopes;
    slopes.reserve(cfg.n_paths);

    for (std::size_t i = 0; i < cfg.n_paths; ++i) {
        const PathAccum& a = accums[i];
        PathSummary& s = stats.paths[i];
        s.aborted = a.aborted;
        if (a.extinct) s.extinct_at = a.extinct_at;
        if (a.nonpos) s.first_nonpositive = {a.nonpos_step, a.nonpos_comp};
        if (a.aborted) {
            stats.aborted_paths += 1;
            continue;
        }
        s.lyapunov_slope = a.slope();
        if (s.lyapunov_slope) slopes.push_back(*s.lyapunov_slope);
        if (a.n_ms > 0) {
            sum_dfe += a.sum_dfe / static_cast<double>(a.n_ms);
            valid += 1;
        }
        if (centers.has_ee) {
            if (a.n_w1 > 0) {
                sum_ee_w1 += a.sum_ee_w1 / static_cast<double>(a.n_w1);
                valid_w1 += 1;
            }
            if (a.n_w2 > 0) {
                sum_ee_w2 += a.sum_ee_w2 / static_cast<double>(a.n_w2);
                valid_w2 += 1;
            }
            if (a.n_ms > 0) sum_ee += (a.sum_ee_w1 + a.sum_ee_w2) / static_cast<double>(a.n_ms);
        }
        if (a.extinct) extinct += 1;
        nmin = std::min(nmin, a.n_min);
        nmax = std::max(nmax, a.n_max);
    }

    const std::size_t alive = cfg.n_paths - stats.aborted_paths;
    if (valid > 0) stats.dfe_ms_average = sum_dfe / static_cast<double>(valid);
    if (centers.has_ee && valid > 0) {
        stats.ee_ms_average = sum_ee / static_cast<double>(valid);
        if (valid_w1 > 0) stats.ee_ms_w1 = sum_ee_w1 / static_cast<double>(valid_w1);
        if (valid_w2 > 0) stats.ee_ms_w2 = sum_ee_w2 / static_cast<double>(valid_w2);
    }
    if (alive > 0)
        stats.extinction_fraction = static_cast<double>(extinct) / static_cast<double>(alive);
    stats.n_min = nmin;
    stats.n_max = nmax;

    stats.lyapunov_paths = slopes.size();
    if (!slopes.empty()) {
        double mean = 0.0;
        for (double v : slopes) mean += v;
        mean /= static_cast<double>(slopes.size());
        stats.lyapunov_mean = mean;
        if (slopes.size() >= 2) {
            double ss = 0.0;
            for (double v : slopes) ss += (v - mean) * (v - mean);
            const double sd = std::sqrt(ss / static_cast<double>(slopes.size() - 1));
            stats.lyapunov_half_width =
                1.96 * sd / std::sqrt(static_cast<double>(slopes.size()));
        }
    }
    return stats;
}

double stationary_distance(const EnsembleStats& stats) {
    if (!stats.hist_w1.populated() || !stats.hist_w2.populated())
        throw std::runtime_error(
            "stationary_distance: a comparison window received no samples");
    return total_variation(stats.hist_w1, stats.hist_w2);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::inapplicable: return "INAPPLICABLE";
    }
    return "?";
}

BoundCheck dfe_bound_check(const EnsembleStats& stats, const DfeBoundReport& report,
                           double tolerance) {
    BoundCheck chk;
    if (!report.hypotheses_hold || !report.bound_value) {
        chk.verdict = Verdict::inapplicable;
        return chk;
    }
    chk.observed = stats.dfe_ms_average;
    chk.limit = std::max(*report.bound_value * (1.0 + tolerance), 1e-3);
    chk.verdict = chk.observed <= chk.limit ? Verdict::pass : Verdict::fail;
    return chk;
}

BoundCheck boundedness_check(const EnsembleStats& stats, const EnsembleConfig& cfg,
                             const ModelParams& p) {
    BoundCheck chk;
    chk.observed = stats.n_max;
    chk.limit = 10.0 * std::max(cfg.sim.initial.total(), p.lambda / p.mu);
    chk.verdict =
        (stats.n_min > 0.0 && stats.n_max < chk.limit) ? Verdict::pass : Verdict::fail;
    return chk;
}

}  // namespace sirs
