#pragma once
// SIRS compartment model with multiplicative environmental noise:
// deterministic rates, state, drift/diffusion fields, equilibria and the
// basic reproduction number.

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sirs {

/// Deterministic model rates. All strictly positive.
/// Units: lambda individuals/time; beta 1/(individuals*time); the rest 1/time.
struct ModelParams {
    double lambda;  // recruitment rate
    double beta;    // effective contact rate
    double eta;     // immunity loss rate
    double mu;      // natural death rate
    double gamma;   // recovery rate
    double alpha;   // disease-induced death rate

    std::vector<std::string> validate() const;
    void require_valid() const;  // throws std::invalid_argument listing every violation
};

/// White-noise intensities on the four Brownian channels. Non-negative;
/// all zero recovers the deterministic model.
struct NoiseIntensities {
    double sigma1;  // susceptible channel
    double sigma2;  // infected channel
    double sigma3;  // recovered channel
    double sigma4;  // transmission (X*Y) channel

    std::vector<std::string> validate() const;
    void require_valid() const;
};

/// One point (x, y, z) = (susceptible, infected, recovered), in individuals.
struct State {
    double x;
    double y;
    double z;

    /// Membership in the open positive octant.
    bool admissible() const { return x > 0.0 && y > 0.0 && z > 0.0; }

    double total() const { return x + y + z; }
};

/// Equilibria of the deterministic system. The endemic equilibrium is
/// present iff r0 > 1; at r0 <= 1 it leaves the positive octant.
struct Equilibria {
    State dfe;                // disease-free equilibrium (lambda/mu, 0, 0)
    std::optional<State> ee;  // endemic equilibrium
    double r0;
};

/// beta*lambda / (mu*(alpha+mu+gamma)).
double basic_reproduction_number(const ModelParams& p);

/// Closed-form equilibria. The endemic coordinates satisfy drift == 0 to
/// round-off: X* = (alpha+mu+gamma)/beta, Z* derived from the stationarity
/// relations, Y* = (mu+eta)/gamma * Z*.
Equilibria equilibria(const ModelParams& p);

/// Deterministic vector field at s.
std::array<double, 3> drift(const State& s, const ModelParams& p);

/// Diffusion matrix, rows = (x, y, z), columns = the four noise channels:
/// col1 (s1*x,0,0), col2 (0,s2*y,0), col3 (0,0,s3*z), col4 (-s4*x*y, +s4*x*y, 0).
std::array<std::array<double, 4>, 3> diffusion(const State& s, const NoiseIntensities& n);

}  // namespace sirs
