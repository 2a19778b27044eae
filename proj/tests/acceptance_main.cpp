// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sirs/ensemble.hpp"
#include "sirs/config.hpp"
#include "support/convergence.hpp"

using namespace sirs;

namespace {

const ModelParams kLowMu{0.33, 0.013, 0.023, 0.05, 0.04, 0.006};
const ModelParams kHighMu{0.33, 0.013, 0.023, 0.006, 0.04, 0.006};
const State kInitial{10.0, 5.0, 2.0};

// Horizon for the strong-order ladder: long enough that the first-order
// error component dominates the corrected scheme across the whole dt range
// while the half-order component still dominates Euler-Maruyama.
constexpr double kStrongOrderHorizon = 200.0;

double rel(double a, double b) { return std::fabs(a - b) / std::max(1e-300, std::fabs(b)); }

double drift_rel_residual(const State& s, const ModelParams& p) {
    const auto d = drift(s, p);
    const double sx = std::max({p.lambda, p.eta * s.z, p.beta * s.x * s.y, p.mu * s.x});
    const double sy = std::max(p.beta * s.x * s.y, (p.alpha + p.mu + p.gamma) * s.y);
    const double sz = std::max(p.gamma * s.y, (p.eta + p.mu) * s.z);
    double r = std::fabs(d[0]) / std::max(1e-300, sx);
    r = std::max(r, std::fabs(d[1]) / std::max(1e-300, sy));
    r = std::max(r, std::fabs(d[2]) / std::max(1e-300, sz));
    return r;
}

using Outcome = std::pair<bool, std::string>;

Outcome criterion_r0() {
    const double r_low = basic_reproduction_number(kLowMu);
    const double r_high = basic_reproduction_number(kHighMu);
    const bool ok = rel(r_low, 0.89375) < 1e-12 && rel(r_high, 13.75) < 1e-12;
    std::ostringstream os;
    os << "R0(mu=0.05) = " << r_low << ", R0(mu=0.006) = " << r_high;
    return {ok, os.str()};
}

Outcome criterion_equilibria() {
    const auto eq = equilibria(kHighMu);
    if (!eq.ee) return {false, "endemic point missing at R0 = 13.75"};
    const double resid = drift_rel_residual(*eq.ee, kHighMu);
    const auto d0 = drift(eq.dfe, kHighMu);
    const double dfe_resid =
        std::max({std::fabs(d0[0]), std::fabs(d0[1]), std::fabs(d0[2])});
    // closed forms evaluated at 50-digit precision
    const bool values_ok = rel(eq.ee->x, 4.0) < 1e-12 &&
                           rel(eq.ee->y, 15.091836734693877551) < 1e-12 &&
                           rel(eq.ee->z, 20.816326530612244898) < 1e-12;
    std::ostringstream os;
    os << "EE = (" << eq.ee->x << ", " << eq.ee->y << ", " << eq.ee->z
       << "), drift residual " << resid << ", DFE residual " << dfe_resid;
    return {values_ok && resid < 1e-10 && dfe_resid < 1e-12, os.str()};
}

Outcome criterion_deterministic_regimes() {
    std::ostringstream os;
    bool ok = true;
    for (double dt : {0.1, 0.05}) {
        SimConfig low;
        low.dt = dt;
        low.t_final = 2000.0;
        low.initial = kInitial;
        low.scheme = Scheme::milstein_paper;
        const Trajectory tr = simulate(low, kLowMu, NoiseIntensities{0, 0, 0, 0});
        const double y_end = tr.states.back().y;
        bool monotone = true;
        for (std::size_t i = tr.states.size() / 2; i + 16 < tr.states.size(); i += 16)
            if (tr.states[i + 16].y > tr.states[i].y) monotone = false;
        ok = ok && y_end < 1e-4 && monotone && !tr.aborted();
        os << "[dt=" << dt << "] Y(2000) = " << y_end;

        SimConfig high;
        high.dt = dt;
        high.t_final = 4000.0;
        high.initial = kInitial;
        high.scheme = Scheme::rk4;
        const Trajectory te = simulate(high, kHighMu, NoiseIntensities{0, 0, 0, 0});
        const auto eq = equilibria(kHighMu);
        const State& e = te.states.back();
        const double dev = std::max({rel(e.x, eq.ee->x), rel(e.y, eq.ee->y),
                                     rel(e.z, eq.ee->z)});
        ok = ok && dev < 0.01;
        os << ", EE deviation = " << dev << "  ";
    }
    return {ok, os.str()};
}

Outcome criterion_strong_orders() {
    const NoiseIntensities noise{0.01, 0.02, 0.03, 0.01};
    const std::vector<double> dts{0.1, 0.05, 0.025, 0.0125};
    const auto em = testsupport::strong_order(Scheme::euler_maruyama, kHighMu, noise,
                                              kInitial, kStrongOrderHorizon, dts, 0.003125,
                                              64, 20240915);
    const auto mc = testsupport::strong_order(Scheme::milstein_corrected, kHighMu, noise,
                                              kInitial, kStrongOrderHorizon, dts, 0.003125,
                                              64, 20240915);
    // context: the same scheme on the same model without the cross-channel
    // coupling (sigma4 paired with sigma1/sigma2 is what breaks first order
    // for a diagonal-corrections discretization)
    const auto mc_diag = testsupport::strong_order(
        Scheme::milstein_corrected, kHighMu, NoiseIntensities{0.01, 0.02, 0.03, 0.0},
        kInitial, kStrongOrderHorizon, dts, 0.003125, 64, 20240915);
    std::ostringstream os;
    os << "euler-maruyama slope = " << em.slope << ", corrected milstein slope = "
       << mc.slope << " (same scheme on commuting noise, sigma4 = 0: " << mc_diag.slope
       << ")";
    const bool ok = em.slope > 0.25 && em.slope < 0.75 && mc.slope > 0.75 &&
                    mc.slope < 1.25;
    return {ok, os.str()};
}

Outcome criterion_dfe_bound() {
    const NoiseIntensities noise{0.01, 0.02, 0.03, 0.0};
    const auto rep = check_dfe_bound(kLowMu, noise);
    if (!rep.hypotheses_hold || !rep.bound_value)
        return {false, "bound hypotheses unexpectedly violated"};
    if (rel(*rep.bound_value, 0.17493975903614457831) > 1e-12)
        return {false, "bound constant drifted from the closed form"};
    EnsembleConfig cfg;
    cfg.n_paths = 100;
    cfg.sim.dt = 0.1;
    cfg.sim.t_final = 20000.0;
    cfg.sim.initial = kInitial;
    cfg.sim.seed = 71;
    cfg.sim.scheme = Scheme::milstein_corrected;
    cfg.burn_in = 0.0;
    const EnsembleStats stats = run_ensemble(cfg, kLowMu, noise);
    const auto chk = dfe_bound_check(stats, rep);  // 10% tolerance
    std::ostringstream os;
    os << "dfe_ms_average = " << stats.dfe_ms_average << " <= " << chk.limit << " (bound "
       << *rep.bound_value << " x 1.1)";
    return {chk.verdict == Verdict::pass && stats.aborted_paths == 0, os.str()};
}

Outcome criterion_extinction() {
    const NoiseIntensities noise{0.001, 0.02, 0.001, 0.1};
    const auto rep = check_extinction(kHighMu, noise);
    if (rel(rep.exponent_bound, -0.04375) > 1e-12 || !rep.predicts_extinction)
        return {false, "extinction exponent bound drifted from the closed form"};
    EnsembleConfig cfg;
    cfg.n_paths = 200;
    cfg.sim.dt = 0.1;
    cfg.sim.t_final = 2000.0;
    cfg.sim.initial = kInitial;
    cfg.sim.seed = 72;
    cfg.sim.scheme = Scheme::milstein_corrected;
    const EnsembleStats stats = run_ensemble(cfg, kHighMu, noise);
    std::ostringstream os;
    os << "exponent bound = " << rep.exponent_bound << ", mean slope = "
       << (stats.lyapunov_mean ? *stats.lyapunov_mean : 0.0)
       << ", extinction fraction = " << stats.extinction_fraction << " (R0 = 13.75)";
    const bool ok = stats.lyapunov_mean && *stats.lyapunov_mean <= -0.02 &&
                    stats.extinction_fraction >= 0.95 && stats.aborted_paths == 0;
    return {ok, os.str()};
}

Outcome criterion_stationary() {
    const NoiseIntensities noise{0.001, 0.001, 0.001, 0.001};
    const auto rep = check_stationary(kHighMu, noise);
    if (!rep.holds || !rep.c_const || !rep.bound)
        return {false, "stationary condition unexpectedly fails"};
    if (rel(*rep.c_const, 0.0012168671627206612629) > 1e-12 ||
        rel(*rep.bound, 0.047649657770800627943) > 1e-12)
        return {false, "stationary constants drifted from the closed forms"};
    EnsembleConfig cfg;
    cfg.n_paths = 100;
    cfg.sim.dt = 0.1;
    cfg.sim.t_final = 20000.0;
    cfg.sim.initial = kInitial;
    cfg.sim.seed = 73;
    cfg.sim.scheme = Scheme::milstein_corrected;
    cfg.burn_in = 2000.0;
    const EnsembleStats stats = run_ensemble(cfg, kHighMu, noise);
    const double tv = stationary_distance(stats);
    if (!stats.ee_ms_w1 || !stats.ee_ms_w2) return {false, "window means missing"};
    const double drift_rel =
        std::fabs(*stats.ee_ms_w1 - *stats.ee_ms_w2) / std::max(1e-300, *stats.ee_ms_w2);
    std::ostringstream os;
    os << "0 < C = " << *rep.c_const << " < " << *rep.bound
       << "; window TV distance = " << tv << ", window mean drift = " << drift_rel;
    const bool ok = tv < 0.1 && drift_rel <= 0.05 && stats.aborted_paths == 0;
    return {ok, os.str()};
}

Outcome criterion_boundedness() {
    std::ostringstream os;
    bool ok = true;
    double worst_ratio = 0.0;
    std::size_t aborted = 0;
    for (const auto& name : preset_names()) {
        const RunSpec spec = *preset(name);
        EnsembleConfig cfg;
        cfg.n_paths = 200;
        cfg.sim = spec.sim;
        cfg.sim.seed = 74;
        // the population check runs the scheme whose discretization keeps
        // the transmission noise out of the total population
        cfg.sim.scheme = Scheme::milstein_corrected;
        const EnsembleStats stats = run_ensemble(cfg, spec.params, spec.noise);
        const auto chk = boundedness_check(stats, cfg, spec.params);
        aborted += stats.aborted_paths;
        ok = ok && chk.verdict == Verdict::pass && stats.aborted_paths == 0 &&
             stats.n_min > 0.0;
        worst_ratio = std::max(worst_ratio, stats.n_max / chk.limit);
    }
    os << preset_names().size() << " presets x 200 paths; worst n_max/cap = " << worst_ratio
       << ", aborted paths = " << aborted;
    return {ok, os.str()};
}

Outcome criterion_properties() {
    std::ostringstream os;
    std::mt19937_64 gen(20240920);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> st(0.01, 60.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto random_params = [&]() {
        return ModelParams{0.01 + 2.0 * u01(gen),  0.001 + 0.05 * u01(gen),
                           0.001 + 0.2 * u01(gen), 0.001 + 0.2 * u01(gen),
                           0.001 + 0.2 * u01(gen), 0.001 + 0.1 * u01(gen)};
    };

    // bit-identical repeat runs
    {
        SimConfig cfg;
        cfg.dt = 0.1;
        cfg.t_final = 100.0;
        cfg.initial = kInitial;
        cfg.seed = 321;
        const NoiseIntensities noise{0.01, 0.02, 0.03, 0.01};
        const Trajectory a = simulate(cfg, kHighMu, noise);
        const Trajectory b = simulate(cfg, kHighMu, noise);
        if (a.states.size() != b.states.size() ||
            std::memcmp(a.states.data(), b.states.data(),
                        a.states.size() * sizeof(State)) != 0)
            return {false, "repeat trajectory runs differ"};
        EnsembleConfig ecfg;
        ecfg.n_paths = 16;
        ecfg.sim = cfg;
        ecfg.threads = 1;
        const EnsembleStats s1 = run_ensemble(ecfg, kHighMu, noise);
        ecfg.threads = 3;
        const EnsembleStats s2 = run_ensemble(ecfg, kHighMu, noise);
        if (s1.dfe_ms_average != s2.dfe_ms_average || s1.hist_w1.mass != s2.hist_w1.mass)
            return {false, "ensemble statistics depend on thread count"};
    }

    // zero-noise scheme agreement, transmission-noise cancellation in N,
    // R0 and extinction-bound monotonicity
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p = random_params();
        const State s{st(gen), st(gen), st(gen)};
        const double x1 = gauss(gen), x2 = gauss(gen), x3 = gauss(gen), x4 = gauss(gen);

        const auto c0 = kernels::StepCoeffs::make(p, NoiseIntensities{0, 0, 0, 0}, 0.1);
        const State em = step_stochastic(Scheme::euler_maruyama, s, c0, x1, x2, x3, x4);
        const State mp = step_stochastic(Scheme::milstein_paper, s, c0, x1, x2, x3, x4);
        const State mc = step_stochastic(Scheme::milstein_corrected, s, c0, x1, x2, x3, x4);
        if (std::memcmp(&em, &mp, sizeof(State)) != 0 ||
            std::memcmp(&em, &mc, sizeof(State)) != 0)
            return {false, "zero-noise schemes disagree"};

        const NoiseIntensities n4{0.0, 0.0, 0.0, 0.3 * u01(gen)};
        const auto c4 = kernels::StepCoeffs::make(p, n4, 0.1);
        const State out =
            step_stochastic(Scheme::milstein_corrected, s, c4, x1, x2, x3, x4);
        const double dn = out.total() - s.total();
        const double euler = (p.lambda - p.mu * s.total() - p.alpha * s.y) * 0.1;
        const double scale = std::max(1.0, p.beta * s.x * s.y * 0.1 + std::fabs(euler));
        if (std::fabs(dn - euler) > 1e-12 * scale)
            return {false, "transmission noise leaked into the total population"};

        const double r = basic_reproduction_number(p);
        ModelParams pb = p;
        pb.beta *= 1.0 + u01(gen);
        ModelParams pm = p;
        pm.mu *= 1.0 + u01(gen);
        if (!(basic_reproduction_number(pb) > r) || !(basic_reproduction_number(pm) < r))
            return {false, "R0 monotonicity violated"};

        const NoiseIntensities ne{0.0, 0.01 + u01(gen), 0.0, 0.01 + u01(gen)};
        const double bound = check_extinction(p, ne).exponent_bound;
        NoiseIntensities ne2 = ne;
        ne2.sigma2 *= 1.0 + u01(gen);
        NoiseIntensities ne4 = ne;
        ne4.sigma4 *= 1.0 + u01(gen);
        if (!(check_extinction(p, ne2).exponent_bound < bound) ||
            !(check_extinction(p, ne4).exponent_bound < bound))
            return {false, "extinction exponent bound monotonicity violated"};
        ++checked;
    }
    os << checked << " randomized draws: determinism, zero-noise scheme agreement, "
       << "population-noise cancellation, monotonicity";
    return {true, os.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"basic reproduction number closed form", criterion_r0},
        {"equilibria and drift residuals", criterion_equilibria},
        {"deterministic regimes at dt = 0.1 and 0.05", criterion_deterministic_regimes},
        {"strong convergence orders", criterion_strong_orders},
        {"subcritical mean-square bound (100 paths, T = 20000)", criterion_dfe_bound},
        {"noise-driven extinction (200 paths, T = 2000)", criterion_extinction},
        {"stationary regime (100 paths, T = 20000)", criterion_stationary},
        {"population boundedness across presets (200 paths each)", criterion_boundedness},
        {"randomized property suites (1000 draws)", criterion_properties},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, "exception"};
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %zu/%zu %s: %s (%.1fs)\n", outcome.first ? "PASS" : "FAIL", i + 1,
                    criteria.size(), criteria[i].name, outcome.second.c_str(), secs);
        std::fflush(stdout);
        if (!outcome.first) ++failures;
    }
    if (failures == 0) {
        std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size(),
                    criteria.size());
    } else {
        std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
