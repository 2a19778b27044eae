#include "sirs/report.hpp"

#include <sstream>

#include "sirs/csv.hpp"

namespace sirs {

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

std::string opt(const std::optional<double>& v) {
    return v ? fmt_g17(*v) : std::string("undefined");
}

}  // namespace

std::string render_check_report(const RunSpec& spec) {
    std::ostringstream os;
    const Equilibria eq = equilibria(spec.params);
    os << "== model ==\n";
    os << "R0 = " << fmt_g17(eq.r0) << "\n";
    os << "DFE = (" << fmt_g17(eq.dfe.x) << ", 0, 0)\n";
    if (eq.ee) {
        os << "EE = (" << fmt_g17(eq.ee->x) << ", " << fmt_g17(eq.ee->y) << ", "
           << fmt_g17(eq.ee->z) << ")\n";
    } else {
        os << "EE: absent (R0 <= 1)\n";
    }

    os << "\n== stationary-distribution condition ==\n";
    const auto st = check_stationary(spec.params, spec.noise);
    os << "d1 = " << opt(st.d1) << "\n";
    os << "d2 = " << fmt_g17(st.d2) << "\n";
    os << "d3 = " << fmt_g17(st.d3) << "\n";
    os << "c_const = " << opt(st.c_const) << "\n";
    os << "bound = " << opt(st.bound) << "\n";
    if (st.ee_defined) {
        os << "kappa = " << fmt_g17(ellipticity_kappa(spec.noise, *eq.ee)) << "\n";
    } else {
        os << "kappa = undefined (EE absent)\n";
    }
    os << "holds = " << yn(st.holds) << "\n";

    os << "\n== DFE mean-square bound ==\n";
    const auto dfe = check_dfe_bound(spec.params, spec.noise);
    os << "margin1 = " << fmt_g17(dfe.margins[0]) << "\n";
    os << "margin2 = " << fmt_g17(dfe.margins[1]) << "\n";
    os << "margin3 = " << fmt_g17(dfe.margins[2]) << "\n";
    os << "c_min = " << fmt_g17(dfe.c_min) << "\n";
    os << "bound_value = " << opt(dfe.bound_value) << "\n";
    os << "hypotheses_hold = " << yn(dfe.hypotheses_hold) << "\n";
    os << "stochastically_stable = " << yn(dfe.stochastically_stable) << "\n";

    os << "\n== extinction criterion ==\n";
    const auto ext = check_extinction(spec.params, spec.noise);
    os << "lhs = " << fmt_g17(ext.lhs) << "\n";
    os << "rhs = " << (ext.rhs_infinite() ? std::string("inf") : fmt_g17(ext.rhs)) << "\n";
    os << "exponent_bound = "
       << (ext.rhs_infinite() ? std::string("inf") : fmt_g17(ext.exponent_bound)) << "\n";
    os << "extinction predicted: " << yn(ext.predicts_extinction) << "\n";
    return os.str();
}

std::string render_ensemble_report(const RunSpec& spec, const EnsembleConfig& cfg,
                                   const EnsembleStats& stats) {
    std::ostringstream os;
    os << "== ensemble ==\n";
    os << "n_paths = " << stats.n_paths << "\n";
    os << "aborted_paths = " << stats.aborted_paths << "\n";
    os << "scheme = " << scheme_name(cfg.sim.scheme) << "\n";
    os << "t_final = " << fmt_shortest(cfg.sim.t_final) << "\n";
    os << "burn_in = " << fmt_shortest(cfg.burn_in) << "\n";
    os << "t_split = " << fmt_shortest(stats.t_split) << "\n";
    os << "dfe_ms_average = " << fmt_g17(stats.dfe_ms_average) << "\n";
    os << "ee_ms_average = " << opt(stats.ee_ms_average) << "\n";
    os << "ee_ms_window1 = " << opt(stats.ee_ms_w1) << "\n";
    os << "ee_ms_window2 = " << opt(stats.ee_ms_w2) << "\n";
    os << "lyapunov_mean = " << opt(stats.lyapunov_mean) << "\n";
    os << "lyapunov_half_width_95 = " << opt(stats.lyapunov_half_width) << "\n";
    os << "lyapunov_paths = " << stats.lyapunov_paths << "\n";
    os << "extinction_fraction = " << fmt_g17(stats.extinction_fraction) << "\n";
    os << "n_min = " << fmt_g17(stats.n_min) << "\n";
    os << "n_max = " << fmt_g17(stats.n_max) << "\n";
    bool tv_ok = stats.hist_w1.populated() && stats.hist_w2.populated();
    os << "window_tv_distance = "
       << (tv_ok ? fmt_g17(total_variation(stats.hist_w1, stats.hist_w2))
                 : std::string("undefined"))
       << "\n";

    os << "\n== verdicts ==\n";
    const auto bnd = boundedness_check(stats, cfg, spec.params);
    os << "population bounded (0 < n_min, n_max < " << fmt_g17(bnd.limit)
       << "): " << verdict_name(bnd.verdict) << "\n";

    const auto dfe_rep = check_dfe_bound(spec.params, spec.noise);
    const auto dfe_chk = dfe_bound_check(stats, dfe_rep);
    if (dfe_chk.verdict == Verdict::inapplicable) {
        os << "dfe mean-square bound: INAPPLICABLE (hypotheses do not hold)\n";
    } else {
        os << "dfe_ms_average <= " << fmt_g17(dfe_chk.limit) << " (bound "
           << opt(dfe_rep.bound_value) << " x 1.1): " << verdict_name(dfe_chk.verdict)
           << "\n";
    }

    const auto ext = check_extinction(spec.params, spec.noise);
    if (ext.predicts_extinction) {
        const bool frac_ok = stats.extinction_fraction >= 0.95;
        const bool slope_ok = stats.lyapunov_mean && *stats.lyapunov_mean < 0.0;
        os << "extinction predicted (exponent bound " << fmt_g17(ext.exponent_bound)
           << "): extinction_fraction = " << fmt_g17(stats.extinction_fraction)
           << ", mean slope = " << opt(stats.lyapunov_mean) << " -> "
           << verdict_name(frac_ok && slope_ok ? Verdict::pass : Verdict::fail) << "\n";
    } else {
        os << "extinction criterion: INAPPLICABLE (no extinction predicted)\n";
    }
    return os.str();
}

}  // namespace sirs
