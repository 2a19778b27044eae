#include "sirs/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sirs {

StationaryConditionReport check_stationary(const ModelParams& p, const NoiseIntensities& n) {
    StationaryConditionReport rep;
    const Equilibria eq = equilibria(p);
    rep.r0 = eq.r0;
    rep.ee_defined = eq.ee.has_value();

    const double s1sq = n.sigma1 * n.sigma1;
    const double s2sq = n.sigma2 * n.sigma2;
    const double s3sq = n.sigma3 * n.sigma3;
    const double s4sq = n.sigma4 * n.sigma4;
    const double two_mu_alpha = 2.0 * p.mu + p.alpha;
    const double gma = p.gamma + two_mu_alpha;

    rep.d2 = p.mu + p.alpha - s2sq;
    rep.d3 = (p.mu * gma + p.eta * two_mu_alpha) / p.gamma - gma / p.gamma * s3sq;

    if (!rep.ee_defined) {
        rep.holds = false;
        return rep;
    }

    const State& ee = *eq.ee;
    rep.d1 = p.mu / 2.0 - s1sq - two_mu_alpha * ee.y * s4sq / p.beta;
    rep.c_const = s1sq * ee.x * ee.x +
                  (ee.y * ee.y + two_mu_alpha / (2.0 * p.beta) * ee.y) * s2sq +
                  gma / p.gamma * ee.z * ee.z * s3sq +
                  two_mu_alpha / p.beta * ee.x * ee.x * ee.y * s4sq;
    rep.bound = std::min({*rep.d1 * ee.x * ee.x, rep.d2 * ee.y * ee.y, rep.d3 * ee.z * ee.z});
    rep.holds = rep.r0 > 1.0 && 0.0 < *rep.c_const && *rep.c_const < *rep.bound;
    return rep;
}

double ellipticity_kappa(const NoiseIntensities& n, const State& ee) {
    const double k1 = n.sigma1 * n.sigma1 * ee.x * ee.x;
    const double k2 = n.sigma2 * n.sigma2 * ee.y * ee.y;
    const double k3 = n.sigma3 * n.sigma3 * ee.z * ee.z;
    return std::min({k1, k2, k3});
}

DfeBoundReport check_dfe_bound(const ModelParams& p, const NoiseIntensities& n) {
    DfeBoundReport rep;
    rep.r0 = basic_reproduction_number(p);

    const double s1sq = n.sigma1 * n.sigma1;
    const double s2sq = n.sigma2 * n.sigma2;
    const double s3sq = n.sigma3 * n.sigma3;
    const double two_mu_alpha = 2.0 * p.mu + p.alpha;

    rep.margins = {
        p.mu / 2.0 - s1sq,
        (p.mu + p.alpha) - s2sq / 2.0,
        (two_mu_alpha * (p.mu + p.eta) + p.gamma * p.mu) / p.gamma - s3sq,
    };
    rep.c_min = std::min({rep.margins[0], rep.margins[1], rep.margins[2]});
    rep.hypotheses_hold =
        rep.r0 < 1.0 && rep.margins[0] > 0.0 && rep.margins[1] > 0.0 && rep.margins[2] > 0.0;
    rep.stochastically_stable = rep.hypotheses_hold && n.sigma1 == 0.0;

    if (rep.hypotheses_hold && rep.c_min > 0.0) {
        rep.bound_value = s1sq * p.lambda * p.lambda / (rep.c_min * p.mu * p.mu);
    }
    return rep;
}

bool ExtinctionReport::rhs_infinite() const { return std::isinf(rhs); }

ExtinctionReport check_extinction(const ModelParams& p, const NoiseIntensities& n) {
    ExtinctionReport rep;
    rep.lhs = (p.alpha + p.mu + p.gamma) + n.sigma2 * n.sigma2 / 2.0;
    rep.rhs = n.sigma4 > 0.0 ? p.beta * p.beta / (2.0 * n.sigma4 * n.sigma4)
                             : std::numeric_limits<double>::infinity();
    rep.exponent_bound = rep.rhs - rep.lhs;
    rep.predicts_extinction = rep.lhs > rep.rhs;
    return rep;
}

double extinction_sigma4_threshold(const ModelParams& p, double sigma2) {
    return p.beta / std::sqrt(2.0 * (p.alpha + p.mu + p.gamma) + sigma2 * sigma2);
}

}  // namespace sirs
