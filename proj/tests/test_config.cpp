#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sirs/config.hpp"
#include "sirs/csv.hpp"

using namespace sirs;

TEST_CASE("config text parses into a run spec") {
    const std::string text = R"(
# comment line
model.lambda = 0.33
model.beta = 0.013
model.eta = 0.023
model.mu = 0.006       # trailing comment
model.gamma = 0.04
model.alpha = 0.006
noise.sigma4 = 0.1
sim.dt = 0.05
sim.t_final = 1000
sim.x0 = 10
sim.y0 = 5
sim.z0 = 2
sim.seed = 99
sim.scheme = milstein-paper
sim.positivity = none
ensemble.n_paths = 32
ensemble.burn_in = 100
ensemble.histogram_bins = 10
ensemble.window_split = 0.25
)";
    const auto parsed = parse_config_text(text);
    REQUIRE(parsed.ok());
    const RunSpec& s = parsed.spec;
    CHECK(s.params.mu == 0.006);
    CHECK(s.noise.sigma4 == 0.1);
    CHECK(s.noise.sigma1 == 0.0);  // defaulted
    CHECK(s.sim.dt == 0.05);
    CHECK(s.sim.seed == 99);
    CHECK(s.sim.scheme == Scheme::milstein_paper);
    CHECK(s.sim.positivity == PositivityPolicy::none);
    REQUIRE(s.ensemble.has_value());
    CHECK(s.ensemble->n_paths == 32);
    CHECK(s.ensemble->window_split == 0.25);
    CHECK(s.validate().empty());
}

TEST_CASE("parse errors are all reported with line numbers") {
    const std::string text = R"(
model.beta = not_a_number
nonsense line
unknown.key = 3
sim.scheme = fancy
)";
    const auto parsed = parse_config_text(text);
    REQUIRE(parsed.errors.size() == 4);
    CHECK(parsed.errors[0].find("model.beta") != std::string::npos);
    CHECK(parsed.errors[1].find("line 3") != std::string::npos);
    CHECK(parsed.errors[2].find("unknown key") != std::string::npos);
    CHECK(parsed.errors[3].find("fancy") != std::string::npos);
}

TEST_CASE("spec validation lists every violated field") {
    RunSpec spec;
    spec.params.beta = -1.0;
    spec.params.mu = 0.0;
    spec.noise.sigma2 = -0.5;
    spec.sim.dt = 0.0;
    const auto issues = spec.validate();
    CHECK(issues.size() >= 4);
    bool has_beta = false, has_sigma = false, has_dt = false;
    for (const auto& i : issues) {
        if (i.find("model.beta") != std::string::npos) has_beta = true;
        if (i.find("noise.sigma2") != std::string::npos) has_sigma = true;
        if (i.find("sim.dt") != std::string::npos) has_dt = true;
    }
    CHECK(has_beta);
    CHECK(has_sigma);
    CHECK(has_dt);
}

TEST_CASE("presets cover the simulation regimes and validate") {
    for (const auto& name : preset_names()) {
        auto spec = preset(name);
        REQUIRE(spec.has_value());
        CHECK(spec->validate().empty());
        CHECK(spec->sim.t_final == 400.0);
        CHECK(spec->sim.scheme == Scheme::milstein_paper);
    }
    CHECK(preset("fig1")->params.mu == 0.05);
    CHECK(preset("fig2")->params.mu == 0.006);
    CHECK(preset("fig3")->noise.sigma4 == 0.01);
    CHECK(preset("fig3b")->noise.sigma4 == 0.03);
    CHECK(preset("fig7")->noise.sigma1 == 0.01);
    CHECK(preset("fig7b")->noise.sigma1 == 0.03);
    CHECK(!preset("fig9").has_value());
}

TEST_CASE("canonical serialization round-trips and fingerprints") {
    RunSpec spec = *preset("fig7");
    const std::string text = serialize_config(spec);
    const auto reparsed = parse_config_text(text);
    REQUIRE(reparsed.ok());
    CHECK(serialize_config(reparsed.spec) == text);

    const auto h1 = fnv1a64(text);
    RunSpec other = spec;
    other.sim.seed += 1;
    CHECK(fnv1a64(serialize_config(other)) != h1);
}

TEST_CASE("sweep axis application") {
    RunSpec spec = *preset("fig2");
    CHECK(!apply_key(spec, "noise.sigma4", 0.25).has_value());
    CHECK(spec.noise.sigma4 == 0.25);
    CHECK(!apply_key(spec, "model.mu", 0.05).has_value());
    CHECK(spec.params.mu == 0.05);
    CHECK(apply_key(spec, "sim.dt", 0.01).has_value());  // not a sweepable axis
}

TEST_CASE("number formatting round-trips") {
    for (double v : {0.1, 0.89375, 13.75, -0.04375, 1.0 / 3.0, 6.6e-7}) {
        CHECK(std::stod(fmt_shortest(v)) == v);
        CHECK(std::stod(fmt_g17(v)) == v);
    }
}
