#include "sirs/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "sirs/csv.hpp"
#include "sirs/report.hpp"

namespace sirs {

namespace {

std::string hash_hex(const RunSpec& spec) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(serialize_config(spec))));
    return buf;
}

std::vector<std::pair<std::string, std::string>> manifest_common(const RunSpec& spec,
                                                                 const char* command) {
    return {
        {"tool_version", kVersion},
        {"command", command},
        {"config_hash", hash_hex(spec)},
        {"seed", std::to_string(spec.sim.seed)},
        {"scheme", scheme_name(spec.sim.scheme)},
        {"dt", fmt_shortest(spec.sim.dt)},
        {"t_final", fmt_shortest(spec.sim.t_final)},
    };
}

void write_run_files(const RunSpec& spec,
                     const std::vector<std::pair<std::string, std::string>>& manifest,
                     const std::string& dir) {
    write_file(dir + "/manifest.txt", manifest_text(manifest));
    write_file(dir + "/config_resolved.cfg", serialize_config(spec));
}

std::string histogram_csv(const Histogram3& h) {
    std::string out = "ix,iy,iz,mass\n";
    for (std::size_t ix = 0; ix < h.bins; ++ix)
        for (std::size_t iy = 0; iy < h.bins; ++iy)
            for (std::size_t iz = 0; iz < h.bins; ++iz) {
                const double m = h.mass[(ix * h.bins + iy) * h.bins + iz];
                if (m > 0.0) {
                    out += std::to_string(ix) + ',' + std::to_string(iy) + ',' +
                           std::to_string(iz) + ',' + fmt_shortest(m) + '\n';
                }
            }
    return out;
}

std::string paths_csv(const EnsembleStats& stats) {
    std::string out = "path,lyapunov_slope,extinct_at\n";
    for (std::size_t i = 0; i < stats.paths.size(); ++i) {
        const PathSummary& p = stats.paths[i];
        out += std::to_string(i);
        out += ',';
        if (p.lyapunov_slope) out += fmt_shortest(*p.lyapunov_slope);
        out += ',';
        if (p.extinct_at) out += fmt_shortest(*p.extinct_at);
        out += '\n';
    }
    return out;
}

}  // namespace

std::string resolve_out_dir(const std::string& cli_out, const std::string& config_out) {
    if (!cli_out.empty()) return cli_out;
    if (const char* env = std::getenv("SIRS_OUT_DIR"); env && *env) return env;
    return config_out;
}

int cmd_check(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const auto issues = spec.validate();
    if (!issues.empty()) {
        err << "config validation failed:\n";
        for (const auto& s : issues) err << "  - " << s << "\n";
        return kExitConfigError;
    }
    const std::string report = render_check_report(spec);
    out << report;
    if (!spec.out_dir.empty()) {
        write_file(spec.out_dir + "/check_report.txt", report);
        write_run_files(spec, manifest_common(spec, "check"), spec.out_dir);
    }
    return kExitOk;
}

int cmd_simulate(const RunSpec& spec, const std::vector<Scheme>& schemes, std::ostream& out,
                 std::ostream& err) {
    const auto issues = spec.validate();
    if (!issues.empty()) {
        err << "config validation failed:\n";
        for (const auto& s : issues) err << "  - " << s << "\n";
        return kExitConfigError;
    }
    const std::string dir = spec.out_dir.empty() ? "sirs-out" : spec.out_dir;
    auto manifest = manifest_common(spec, "simulate");

    int rc = kExitOk;
    std::string scheme_list;
    for (const Scheme scheme : schemes) {
        SimConfig sim = spec.sim;
        sim.scheme = scheme;
        const Trajectory traj = simulate(sim, spec.params, spec.noise);
        const std::string file = dir + "/trajectory_" + scheme_name(scheme) + ".csv";
        write_file(file, trajectory_csv(traj));
        out << "wrote " << file << " (" << traj.states.size() << " rows)\n";
        if (!scheme_list.empty()) scheme_list += ",";
        scheme_list += scheme_name(scheme);
        if (traj.aborted()) {
            err << "trajectory aborted: non-finite state at step " << *traj.aborted_at_step
                << " (scheme " << scheme_name(scheme) << ")\n";
            rc = kExitRuntimeAbort;
        }
        if (traj.first_nonpositive) {
            out << "note: left the positive octant at step " << traj.first_nonpositive->first
                << ", component " << traj.first_nonpositive->second << "\n";
        }
    }
    manifest.emplace_back("schemes", scheme_list);
    write_run_files(spec, manifest, dir);
    return rc;
}

int cmd_ensemble(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    auto issues = spec.validate();
    if (!spec.ensemble) issues.push_back("ensemble section required (set ensemble.n_paths)");
    if (!issues.empty()) {
        err << "config validation failed:\n";
        for (const auto& s : issues) err << "  - " << s << "\n";
        return kExitConfigError;
    }
    const EnsembleConfig cfg = spec.ensemble_or_default();
    const EnsembleStats stats = run_ensemble(cfg, spec.params, spec.noise);
    const std::string report = render_ensemble_report(spec, cfg, stats);
    out << report;

    if (!spec.out_dir.empty()) {
        write_file(spec.out_dir + "/ensemble_report.txt", report);
        write_file(spec.out_dir + "/paths.csv", paths_csv(stats));
        write_file(spec.out_dir + "/hist_w1.csv", histogram_csv(stats.hist_w1));
        write_file(spec.out_dir + "/hist_w2.csv", histogram_csv(stats.hist_w2));
        auto manifest = manifest_common(spec, "ensemble");
        manifest.emplace_back("n_paths", std::to_string(cfg.n_paths));
        manifest.emplace_back("burn_in", fmt_shortest(cfg.burn_in));
        write_run_files(spec, manifest, spec.out_dir);
    }

    if (static_cast<double>(stats.aborted_paths) >
        0.01 * static_cast<double>(stats.n_paths)) {
        err << "aborted paths: " << stats.aborted_paths << " of " << stats.n_paths << "\n";
        return kExitRuntimeAbort;
    }
    return kExitOk;
}

int cmd_sweep(const RunSpec& spec, const std::string& axis, const std::vector<double>& values,
              std::size_t ensemble_paths, std::ostream& out, std::ostream& err) {
    if (values.empty()) {
        err << "sweep requires a non-empty --sweep-values list\n";
        return kExitConfigError;
    }
    {
        RunSpec probe = spec;
        if (auto e = apply_key(probe, axis, values.front())) {
            err << *e << "\n";
            return kExitConfigError;
        }
    }

    std::ostringstream csv;
    csv << "axis,value,ok,r0,st_holds,st_c_const,st_bound,dfe_hypotheses,dfe_c_min,dfe_bound,"
           "ext_lhs,ext_rhs,ext_exponent_bound,predicts_extinction,lyapunov_mean,"
           "extinction_fraction,error\n";

    struct Row {
        double value;
        bool ok;
        bool st_holds = false, dfe_hyp = false, predicts = false;
    };
    std::vector<Row> rows;
    std::size_t succeeded = 0;

    for (const double v : values) {
        RunSpec point = spec;
        apply_key(point, axis, v);
        csv << axis << ',' << fmt_shortest(v) << ',';
        const auto issues = point.validate();
        if (!issues.empty()) {
            csv << "false,,,,,,,,,,,,,,\"" << issues.front() << "\"\n";
            rows.push_back({v, false});
            continue;
        }
        const auto st = check_stationary(point.params, point.noise);
        const auto dfe = check_dfe_bound(point.params, point.noise);
        const auto ext = check_extinction(point.params, point.noise);
        csv << "true," << fmt_shortest(st.r0) << ',' << (st.holds ? "true" : "false") << ','
            << (st.c_const ? fmt_shortest(*st.c_const) : "") << ','
            << (st.bound ? fmt_shortest(*st.bound) : "") << ','
            << (dfe.hypotheses_hold ? "true" : "false") << ',' << fmt_shortest(dfe.c_min)
            << ',' << (dfe.bound_value ? fmt_shortest(*dfe.bound_value) : "") << ','
            << fmt_shortest(ext.lhs) << ','
            << (ext.rhs_infinite() ? "inf" : fmt_shortest(ext.rhs)) << ','
            << (ext.rhs_infinite() ? "inf" : fmt_shortest(ext.exponent_bound)) << ','
            << (ext.predicts_extinction ? "true" : "false") << ',';
        if (ensemble_paths > 0) {
            EnsembleConfig cfg = point.ensemble_or_default();
            cfg.n_paths = ensemble_paths;
            const EnsembleStats stats = run_ensemble(cfg, point.params, point.noise);
            csv << (stats.lyapunov_mean ? fmt_shortest(*stats.lyapunov_mean) : "") << ','
                << fmt_shortest(stats.extinction_fraction) << ',';
        } else {
            csv << ",,";
        }
        csv << "\n";
        rows.push_back({v, true, st.holds, dfe.hypotheses_hold, ext.predicts_extinction});
        ++succeeded;
    }

    auto flip_summary = [&](const char* name, auto get) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (!rows[i - 1].ok || !rows[i].ok) continue;
            const bool a = get(rows[i - 1]), b = get(rows[i]);
            if (a != b) {
                csv << "# " << name << " flips " << (a ? "true" : "false") << "->"
                    << (b ? "true" : "false") << " between " << axis << "="
                    << fmt_shortest(rows[i - 1].value) << " and " << axis << "="
                    << fmt_shortest(rows[i].value) << "\n";
            }
        }
    };
    flip_summary("st_holds", [](const Row& r) { return r.st_holds; });
    flip_summary("dfe_hypotheses", [](const Row& r) { return r.dfe_hyp; });
    flip_summary("predicts_extinction", [](const Row& r) { return r.predicts; });

    out << csv.str();
    if (!spec.out_dir.empty()) {
        write_file(spec.out_dir + "/sweep.csv", csv.str());
        auto manifest = manifest_common(spec, "sweep");
        manifest.emplace_back("sweep_axis", axis);
        write_run_files(spec, manifest, spec.out_dir);
    }
    return succeeded > 0 ? kExitOk : kExitConfigError;
}

}  // namespace sirs
