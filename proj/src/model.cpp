#include "sirs/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sirs {

namespace {

void require_positive(std::vector<std::string>& issues, const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be strictly positive and finite, got " << v;
        issues.push_back(os.str());
    }
}

void require_nonnegative(std::vector<std::string>& issues, const char* name, double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be non-negative and finite, got " << v;
        issues.push_back(os.str());
    }
}

[[noreturn]] void throw_issues(const char* what, const std::vector<std::string>& issues) {
    std::ostringstream os;
    os << what << ":";
    for (const auto& s : issues) os << "\n  - " << s;
    throw std::invalid_argument(os.str());
}

}  // namespace

std::vector<std::string> ModelParams::validate() const {
    std::vector<std::string> issues;
    require_positive(issues, "model.lambda", lambda);
    require_positive(issues, "model.beta", beta);
    require_positive(issues, "model.eta", eta);
    require_positive(issues, "model.mu", mu);
    require_positive(issues, "model.gamma", gamma);
    require_positive(issues, "model.alpha", alpha);
    return issues;
}

void ModelParams::require_valid() const {
    auto issues = validate();
    if (!issues.empty()) throw_issues("invalid model parameters", issues);
}

std::vector<std::string> NoiseIntensities::validate() const {
    std::vector<std::string> issues;
    require_nonnegative(issues, "noise.sigma1", sigma1);
    require_nonnegative(issues, "noise.sigma2", sigma2);
    require_nonnegative(issues, "noise.sigma3", sigma3);
    require_nonnegative(issues, "noise.sigma4", sigma4);
    return issues;
}

void NoiseIntensities::require_valid() const {
    auto issues = validate();
    if (!issues.empty()) throw_issues("invalid noise intensities", issues);
}

double basic_reproduction_number(const ModelParams& p) {
    return p.beta * p.lambda / (p.mu * (p.alpha + p.mu + p.gamma));
}

Equilibria equilibria(const ModelParams& p) {
    Equilibria eq;
    eq.r0 = basic_reproduction_number(p);
    eq.dfe = State{p.lambda / p.mu, 0.0, 0.0};
    if (eq.r0 > 1.0) {
        // X* = (alpha+mu+gamma)/beta == lambda/(mu*R0).
        // Z* follows from eliminating Y* = (mu+eta)/gamma * Z* in the
        // susceptible stationarity relation.
        const double xs = (p.alpha + p.mu + p.gamma) / p.beta;
        const double zs = p.mu * p.gamma * (p.alpha + p.mu + p.gamma) * (eq.r0 - 1.0) /
                          (p.beta * (p.mu * p.gamma + (p.mu + p.eta) * (p.mu + p.alpha)));
        const double ys = (p.mu + p.eta) / p.gamma * zs;
        eq.ee = State{xs, ys, zs};
    }
    return eq;
}

std::array<double, 3> drift(const State& s, const ModelParams& p) {
    const double xy = s.x * s.y;
    return {
        p.lambda + p.eta * s.z - p.beta * xy - p.mu * s.x,
        p.beta * xy - (p.alpha + p.mu + p.gamma) * s.y,
        p.gamma * s.y - (p.eta + p.mu) * s.z,
    };
}

std::array<std::array<double, 4>, 3> diffusion(const State& s, const NoiseIntensities& n) {
    const double w = n.sigma4 * s.x * s.y;
    return {{
        {n.sigma1 * s.x, 0.0, 0.0, -w},
        {0.0, n.sigma2 * s.y, 0.0, w},
        {0.0, 0.0, n.sigma3 * s.z, 0.0},
    }};
}

}  // namespace sirs
