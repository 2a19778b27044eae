#include "sirs/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sirs/csv.hpp"

namespace sirs {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::optional<double> parse_double(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    double v{};
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) return std::nullopt;
    return v;
}

std::optional<std::uint64_t> parse_u64(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) return std::nullopt;
    std::uint64_t v{};
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) return std::nullopt;
    return v;
}

}  // namespace

std::vector<std::string> RunSpec::validate() const {
    std::vector<std::string> issues = params.validate();
    for (auto& s : noise.validate()) issues.push_back(s);
    for (auto& s : sim.validate()) issues.push_back(s);
    if (ensemble) {
        EnsembleConfig cfg = *ensemble;
        cfg.sim = sim;
        for (auto& s : cfg.validate()) issues.push_back(s);
    }
    return issues;
}

EnsembleConfig RunSpec::ensemble_or_default() const {
    EnsembleConfig cfg = ensemble ? *ensemble : EnsembleConfig{};
    cfg.sim = sim;
    return cfg;
}

ParseResult parse_config_text(const std::string& text, const RunSpec& base) {
    ParseResult result;
    result.spec = base;
    RunSpec& spec = result.spec;
    bool saw_ensemble_key = spec.ensemble.has_value();
    EnsembleConfig ens = spec.ensemble ? *spec.ensemble : EnsembleConfig{};

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            result.errors.push_back("line " + std::to_string(lineno) +
                                    ": expected `key = value`, got `" + line + "`");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto bad = [&](const std::string& why) {
            result.errors.push_back("line " + std::to_string(lineno) + ": " + key + ": " + why);
        };
        auto num = [&](double& dst) {
            if (auto v = parse_double(value)) dst = *v;
            else bad("expected a number, got `" + value + "`");
        };

        if (key == "model.lambda") num(spec.params.lambda);
        else if (key == "model.beta") num(spec.params.beta);
        else if (key == "model.eta") num(spec.params.eta);
        else if (key == "model.mu") num(spec.params.mu);
        else if (key == "model.gamma") num(spec.params.gamma);
        else if (key == "model.alpha") num(spec.params.alpha);
        else if (key == "noise.sigma1") num(spec.noise.sigma1);
        else if (key == "noise.sigma2") num(spec.noise.sigma2);
        else if (key == "noise.sigma3") num(spec.noise.sigma3);
        else if (key == "noise.sigma4") num(spec.noise.sigma4);
        else if (key == "sim.dt") num(spec.sim.dt);
        else if (key == "sim.t_final") num(spec.sim.t_final);
        else if (key == "sim.x0") num(spec.sim.initial.x);
        else if (key == "sim.y0") num(spec.sim.initial.y);
        else if (key == "sim.z0") num(spec.sim.initial.z);
        else if (key == "sim.seed") {
            if (auto v = parse_u64(value)) spec.sim.seed = *v;
            else bad("expected an unsigned integer, got `" + value + "`");
        } else if (key == "sim.scheme") {
            if (auto s = scheme_from_name(value)) spec.sim.scheme = *s;
            else bad("unknown scheme `" + value +
                     "` (rk4, euler-maruyama, milstein-paper, milstein-corrected)");
        } else if (key == "sim.positivity") {
            if (auto s = positivity_from_name(value)) spec.sim.positivity = *s;
            else bad("unknown positivity policy `" + value + "` (none, clamp-at-zero)");
        } else if (key == "ensemble.n_paths") {
            saw_ensemble_key = true;
            if (auto v = parse_u64(value)) ens.n_paths = *v;
            else bad("expected an unsigned integer, got `" + value + "`");
        } else if (key == "ensemble.burn_in") {
            saw_ensemble_key = true;
            num(ens.burn_in);
        } else if (key == "ensemble.histogram_bins") {
            saw_ensemble_key = true;
            if (auto v = parse_u64(value)) ens.histogram_bins = *v;
            else bad("expected an unsigned integer, got `" + value + "`");
        } else if (key == "ensemble.window_split") {
            saw_ensemble_key = true;
            num(ens.window_split);
        } else if (key == "ensemble.threads") {
            saw_ensemble_key = true;
            if (auto v = parse_u64(value)) ens.threads = static_cast<unsigned>(*v);
            else bad("expected an unsigned integer, got `" + value + "`");
        } else if (key == "output.dir") {
            spec.out_dir = value;
        } else {
            bad("unknown key");
        }
    }
    if (saw_ensemble_key) {
        ens.sim = spec.sim;
        spec.ensemble = ens;
    }
    return result;
}

ParseResult parse_config_file(const std::string& path, const RunSpec& base) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        ParseResult r;
        r.spec = base;
        r.errors.push_back("cannot open config file: " + path);
        return r;
    }
    std::ostringstream os;
    os << f.rdbuf();
    return parse_config_text(os.str(), base);
}

std::string serialize_config(const RunSpec& spec) {
    std::ostringstream os;
    os << "model.lambda = " << fmt_shortest(spec.params.lambda) << '\n'
       << "model.beta = " << fmt_shortest(spec.params.beta) << '\n'
       << "model.eta = " << fmt_shortest(spec.params.eta) << '\n'
       << "model.mu = " << fmt_shortest(spec.params.mu) << '\n'
       << "model.gamma = " << fmt_shortest(spec.params.gamma) << '\n'
       << "model.alpha = " << fmt_shortest(spec.params.alpha) << '\n'
       << "noise.sigma1 = " << fmt_shortest(spec.noise.sigma1) << '\n'
       << "noise.sigma2 = " << fmt_shortest(spec.noise.sigma2) << '\n'
       << "noise.sigma3 = " << fmt_shortest(spec.noise.sigma3) << '\n'
       << "noise.sigma4 = " << fmt_shortest(spec.noise.sigma4) << '\n'
       << "sim.dt = " << fmt_shortest(spec.sim.dt) << '\n'
       << "sim.t_final = " << fmt_shortest(spec.sim.t_final) << '\n'
       << "sim.x0 = " << fmt_shortest(spec.sim.initial.x) << '\n'
       << "sim.y0 = " << fmt_shortest(spec.sim.initial.y) << '\n'
       << "sim.z0 = " << fmt_shortest(spec.sim.initial.z) << '\n'
       << "sim.seed = " << spec.sim.seed << '\n'
       << "sim.scheme = " << scheme_name(spec.sim.scheme) << '\n'
       << "sim.positivity = " << positivity_name(spec.sim.positivity) << '\n';
    if (spec.ensemble) {
        os << "ensemble.n_paths = " << spec.ensemble->n_paths << '\n'
           << "ensemble.burn_in = " << fmt_shortest(spec.ensemble->burn_in) << '\n'
           << "ensemble.histogram_bins = " << spec.ensemble->histogram_bins << '\n'
           << "ensemble.window_split = " << fmt_shortest(spec.ensemble->window_split) << '\n'
           << "ensemble.threads = " << spec.ensemble->threads << '\n';
    }
    return os.str();
}

namespace {

RunSpec base_table1(double mu) {
    RunSpec spec;
    spec.params = ModelParams{0.33, 0.013, 0.023, mu, 0.04, 0.006};
    spec.noise = NoiseIntensities{0.0, 0.0, 0.0, 0.0};
    spec.sim.dt = 0.1;
    spec.sim.t_final = 400.0;
    spec.sim.initial = State{10.0, 5.0, 2.0};
    spec.sim.seed = 1;
    spec.sim.scheme = Scheme::milstein_paper;
    spec.sim.positivity = PositivityPolicy::clamp_at_zero;
    return spec;
}

const double kMuLow = 0.05;    // subcritical regime (R0 < 1)
const double kMuHigh = 0.006;  // supercritical regime (R0 > 1)

}  // namespace

std::optional<RunSpec> preset(const std::string& name) {
    struct Entry {
        const char* name;
        double mu;
        NoiseIntensities noise;
    };
    static const Entry entries[] = {
        {"fig1", kMuLow, {0.0, 0.0, 0.0, 0.0}},
        {"fig2", kMuHigh, {0.0, 0.0, 0.0, 0.0}},
        {"fig3", kMuLow, {0.0, 0.0, 0.0, 0.01}},
        {"fig3b", kMuLow, {0.0, 0.0, 0.0, 0.03}},
        {"fig4", kMuHigh, {0.0, 0.0, 0.0, 0.01}},
        {"fig4b", kMuHigh, {0.0, 0.0, 0.0, 0.03}},
        {"fig5", kMuLow, {0.01, 0.02, 0.03, 0.0}},
        {"fig5b", kMuLow, {0.03, 0.02, 0.01, 0.0}},
        {"fig6", kMuHigh, {0.01, 0.02, 0.03, 0.0}},
        {"fig6b", kMuHigh, {0.03, 0.02, 0.01, 0.0}},
        {"fig7", kMuLow, {0.01, 0.02, 0.03, 0.01}},
        {"fig7b", kMuLow, {0.03, 0.02, 0.01, 0.03}},
        {"fig8", kMuHigh, {0.01, 0.02, 0.03, 0.01}},
        {"fig8b", kMuHigh, {0.03, 0.02, 0.01, 0.03}},
    };
    for (const auto& e : entries) {
        if (name == e.name) {
            RunSpec spec = base_table1(e.mu);
            spec.noise = e.noise;
            return spec;
        }
    }
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2",  "fig3", "fig3b", "fig4", "fig4b", "fig5",
            "fig5b", "fig6", "fig6b", "fig7", "fig7b", "fig8", "fig8b"};
}

std::optional<std::string> apply_key(RunSpec& spec, const std::string& key, double value) {
    if (key == "model.lambda") spec.params.lambda = value;
    else if (key == "model.beta") spec.params.beta = value;
    else if (key == "model.eta") spec.params.eta = value;
    else if (key == "model.mu") spec.params.mu = value;
    else if (key == "model.gamma") spec.params.gamma = value;
    else if (key == "model.alpha") spec.params.alpha = value;
    else if (key == "noise.sigma1") spec.noise.sigma1 = value;
    else if (key == "noise.sigma2") spec.noise.sigma2 = value;
    else if (key == "noise.sigma3") spec.noise.sigma3 = value;
    else if (key == "noise.sigma4") spec.noise.sigma4 = value;
    else return "unknown sweep axis `" + key + "` (model.* or noise.* numeric field)";
    return std::nullopt;
}

}  // namespace sirs
