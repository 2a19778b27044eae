#pragma once
// Parametric condition checks for the stochastic model: existence of a
// stationary distribution, mean-square bound around the disease-free
// equilibrium, and the noise-driven extinction criterion. Each check
// returns every computed constant so the verdict can be re-derived.

#include <array>
#include <optional>

#include "sirs/model.hpp"

namespace sirs {

/// Stationary-distribution condition. Quadratic-form coefficients d1..d3,
/// the offset constant c_const, and bound = min(d1*X*^2, d2*Y*^2, d3*Z*^2).
/// holds = (r0 > 1) && (0 < c_const < bound). When r0 <= 1 the endemic
/// equilibrium is undefined and the EE-dependent constants are absent.
struct StationaryConditionReport {
    double r0;
    bool ee_defined;
    std::optional<double> d1;  // needs Y*
    double d2;
    double d3;
    std::optional<double> c_const;
    std::optional<double> bound;
    bool holds;
};

StationaryConditionReport check_stationary(const ModelParams& p, const NoiseIntensities& n);

/// Uniform-ellipticity constant at the endemic equilibrium:
/// kappa = min(s1^2 X*^2, s2^2 Y*^2, s3^2 Z*^2). kappa > 0 certifies the
/// non-degeneracy hypothesis behind the stationary-distribution check.
double ellipticity_kappa(const NoiseIntensities& n, const State& ee);

/// Mean-square fluctuation bound around the disease-free equilibrium.
/// margins = (mu/2 - s1^2, (mu+alpha) - s2^2/2,
///            ((2mu+alpha)(mu+eta)+gamma*mu)/gamma - s3^2);
/// c_min = min(margins); bound_value = s1^2 lambda^2 / (c_min mu^2), present
/// only when the hypotheses hold. With s1 == 0 the bound degenerates to 0 and
/// the DFE is flagged stochastically asymptotically stable.
struct DfeBoundReport {
    double r0;
    std::array<double, 3> margins;
    double c_min;
    std::optional<double> bound_value;
    bool hypotheses_hold;  // r0 < 1 and all three margins strictly positive
    bool stochastically_stable;  // s1 == 0 branch
};

DfeBoundReport check_dfe_bound(const ModelParams& p, const NoiseIntensities& n);

/// Extinction criterion: the infected compartment dies out exponentially
/// a.s. when lhs = (alpha+mu+gamma) + s2^2/2 exceeds rhs = beta^2/(2 s4^2).
/// exponent_bound = rhs - lhs is the almost-sure upper bound on the long-run
/// growth rate of ln Y(t)/t. s4 == 0 makes rhs infinite (no prediction).
struct ExtinctionReport {
    double lhs;
    double rhs;
    double exponent_bound;
    bool predicts_extinction;
    bool rhs_infinite() const;
};

ExtinctionReport check_extinction(const ModelParams& p, const NoiseIntensities& n);

/// Smallest sigma4 that tips the extinction criterion for a given sigma2:
/// beta / sqrt(2(alpha+mu+gamma) + sigma2^2).
double extinction_sigma4_threshold(const ModelParams& p, double sigma2);

}  // namespace sirs
