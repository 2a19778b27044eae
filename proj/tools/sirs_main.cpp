// Command-line front end: check | simulate | ensemble | sweep.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sirs/cli.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    std::string seed_str;
    std::string scheme_str;
    std::size_t paths = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--config", a.config_path, "key = value config file");
    cmd->add_option("--preset", a.preset_name,
                    "named regime preset (fig1..fig8, b-variants fig3b..fig8b)");
    cmd->add_option("--out", a.out_dir, "output directory");
    cmd->add_option("--seed", a.seed_str, "base seed (unsigned 64-bit)");
    cmd->add_option("--scheme", a.scheme_str,
                    "integration scheme; simulate accepts a comma list "
                    "(rk4, euler-maruyama, milstein-paper, milstein-corrected)");
    cmd->add_option("--paths", a.paths, "ensemble path count");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    return parts;
}

/// Resolve preset/config/flags into a validated-enough RunSpec. Returns
/// false after printing errors (config failures list every problem).
bool build_spec(const CommonArgs& a, sirs::RunSpec& spec, std::vector<sirs::Scheme>& schemes,
                std::ostream& err) {
    spec = sirs::RunSpec{};
    bool have_base = false;
    if (!a.preset_name.empty()) {
        auto p = sirs::preset(a.preset_name);
        if (!p) {
            err << "unknown preset `" << a.preset_name << "`; available:";
            for (const auto& n : sirs::preset_names()) err << " " << n;
            err << "\n";
            return false;
        }
        spec = *p;
        have_base = true;
    }
    if (!a.config_path.empty()) {
        auto parsed = sirs::parse_config_file(a.config_path, spec);
        if (!parsed.ok()) {
            err << "config errors in " << a.config_path << ":\n";
            for (const auto& e : parsed.errors) err << "  - " << e << "\n";
            return false;
        }
        spec = parsed.spec;
        have_base = true;
    }
    if (!have_base) {
        err << "either --config or --preset is required\n";
        return false;
    }
    if (!a.seed_str.empty()) {
        try {
            spec.sim.seed = std::stoull(a.seed_str);
        } catch (const std::exception&) {
            err << "--seed: not an unsigned integer: " << a.seed_str << "\n";
            return false;
        }
    }
    schemes.clear();
    if (!a.scheme_str.empty()) {
        for (const auto& name : split_csv(a.scheme_str)) {
            auto s = sirs::scheme_from_name(name);
            if (!s) {
                err << "--scheme: unknown scheme `" << name << "`\n";
                return false;
            }
            schemes.push_back(*s);
        }
        spec.sim.scheme = schemes.front();
    } else {
        schemes.push_back(spec.sim.scheme);
    }
    if (a.paths > 0) {
        auto cfg = spec.ensemble_or_default();
        cfg.n_paths = a.paths;
        spec.ensemble = cfg;
    }
    spec.out_dir = sirs::resolve_out_dir(a.out_dir, spec.out_dir);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic SIRS simulator and condition checker"};
    app.require_subcommand(1);

    CommonArgs check_args, sim_args, ens_args, sweep_args;
    std::string sweep_axis;
    std::string sweep_values;

    CLI::App* check = app.add_subcommand("check", "evaluate every parametric condition");
    add_common(check, check_args);
    CLI::App* simulate = app.add_subcommand("simulate", "integrate one trajectory per scheme");
    add_common(simulate, sim_args);
    CLI::App* ensemble = app.add_subcommand("ensemble", "Monte Carlo ensemble statistics");
    add_common(ensemble, ens_args);
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep with threshold summary");
    add_common(sweep, sweep_args);
    sweep->add_option("--sweep-axis", sweep_axis, "dotted field to vary (e.g. noise.sigma4)");
    sweep->add_option("--sweep-values", sweep_values, "comma-separated values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? sirs::kExitOk : sirs::kExitConfigError;
    }

    sirs::RunSpec spec;
    std::vector<sirs::Scheme> schemes;

    try {
        if (check->parsed()) {
            if (!build_spec(check_args, spec, schemes, std::cerr)) return sirs::kExitConfigError;
            return sirs::cmd_check(spec, std::cout, std::cerr);
        }
        if (simulate->parsed()) {
            if (!build_spec(sim_args, spec, schemes, std::cerr)) return sirs::kExitConfigError;
            return sirs::cmd_simulate(spec, schemes, std::cout, std::cerr);
        }
        if (ensemble->parsed()) {
            if (!build_spec(ens_args, spec, schemes, std::cerr)) return sirs::kExitConfigError;
            return sirs::cmd_ensemble(spec, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            if (!build_spec(sweep_args, spec, schemes, std::cerr)) return sirs::kExitConfigError;
            std::vector<double> values;
            for (const auto& part : split_csv(sweep_values)) {
                try {
                    values.push_back(std::stod(part));
                } catch (const std::exception&) {
                    std::cerr << "--sweep-values: not a number: " << part << "\n";
                    return sirs::kExitConfigError;
                }
            }
            return sirs::cmd_sweep(spec, sweep_axis, values, sweep_args.paths, std::cout,
                                   std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sirs::kExitRuntimeAbort;
    }
    return sirs::kExitOk;
}
