#pragma once
// Time-step kernels for the stochastic schemes. The scalar per-path
// functions below are the reference definitions; the batch kernels advance
// many independent paths through one step and exist in a scalar variant and
// SIMD variants (AVX2, NEON) selected at runtime. All variants perform the
// same IEEE operations in the same order, so their outputs are bit-identical
// — the equivalence tests assert exact equality.

#include <cstddef>
#include <optional>
#include <vector>

#include "sirs/model.hpp"

namespace sirs::kernels {

/// Per-step constants shared by every path of a run.
struct StepCoeffs {
    double lambda, beta, eta, mu, gamma;
    double amg;    // alpha + mu + gamma
    double etamu;  // eta + mu
    double s1, s2, s3, s4;
    double q1, q2, q3, q4;  // 0.5 * si^2 * dt
    double sdt;             // sqrt(dt)
    double dt;

    static StepCoeffs make(const ModelParams& p, const NoiseIntensities& n, double dt);
};

/// Euler-Maruyama, diffusion signs matching the model (transmission noise
/// leaves X and enters Y).
inline void step_euler_one(const StepCoeffs& c, double& x, double& y, double& z,
                           double xi1, double xi2, double xi3, double xi4) {
    const double xy = x * y;
    const double fx = (c.lambda + c.eta * z - c.beta * xy - c.mu * x) * c.dt;
    const double fy = (c.beta * xy - c.amg * y) * c.dt;
    const double fz = (c.gamma * y - c.etamu * z) * c.dt;
    const double n1 = c.s1 * xi1 * c.sdt;
    const double n2 = c.s2 * xi2 * c.sdt;
    const double n3 = c.s3 * xi3 * c.sdt;
    const double w4 = xy * (c.s4 * xi4 * c.sdt);
    x = x + fx + x * n1 - w4;
    y = y + fy + y * n2 + w4;
    z = z + fz + z * n3;
}

/// Milstein discretization exactly as printed in the source scheme: the
/// transmission term enters BOTH the X and Y updates with a plus sign, and
/// its second-order correction multiplies x*y directly.
inline void step_milstein_paper_one(const StepCoeffs& c, double& x, double& y, double& z,
                                    double xi1, double xi2, double xi3, double xi4) {
    const double xy = x * y;
    const double fx = (c.lambda + c.eta * z - c.beta * xy - c.mu * x) * c.dt;
    const double fy = (c.beta * xy - c.amg * y) * c.dt;
    const double fz = (c.gamma * y - c.etamu * z) * c.dt;
    const double m1 = c.s1 * xi1 * c.sdt + (xi1 * xi1 - 1.0) * c.q1;
    const double m2 = c.s2 * xi2 * c.sdt + (xi2 * xi2 - 1.0) * c.q2;
    const double m3 = c.s3 * xi3 * c.sdt + (xi3 * xi3 - 1.0) * c.q3;
    const double m4 = c.s4 * xi4 * c.sdt + (xi4 * xi4 - 1.0) * c.q4;
    const double w4 = xy * m4;
    x = x + fx + x * m1 + w4;
    y = y + fy + y * m2 + w4;
    z = z + fz + z * m3;
}

/// Sign-consistent Milstein: the transmission increment leaves X and enters
/// Y, and its second-order correction uses the diagonal derivative of the
/// actual coupled diffusion, x*y*(y - x) * 0.5*s4^2*(xi^2-1)*dt on X and the
/// exact negative on Y. The transmission contributions to X and Y cancel
/// term-for-term, so the total population never sees the s4 channel.
inline void step_milstein_corrected_one(const StepCoeffs& c, double& x, double& y, double& z,
                                        double xi1, double xi2, double xi3, double xi4) {
    const double xy = x * y;
    const double fx = (c.lambda + c.eta * z - c.beta * xy - c.mu * x) * c.dt;
    const double fy = (c.beta * xy - c.amg * y) * c.dt;
    const double fz = (c.gamma * y - c.etamu * z) * c.dt;
    const double m1 = c.s1 * xi1 * c.sdt + (xi1 * xi1 - 1.0) * c.q1;
    const double m2 = c.s2 * xi2 * c.sdt + (xi2 * xi2 - 1.0) * c.q2;
    const double m3 = c.s3 * xi3 * c.sdt + (xi3 * xi3 - 1.0) * c.q3;
    const double w4 = xy * (c.s4 * xi4 * c.sdt);
    const double d4 = xy * (y - x) * ((xi4 * xi4 - 1.0) * c.q4);
    x = x + fx + x * m1 - w4 + d4;
    y = y + fy + y * m2 + w4 - d4;
    z = z + fz + z * m3;
}

/// SoA view over a batch of independent paths and their per-step draws.
struct Batch {
    double* x;
    double* y;
    double* z;
    const double* xi1;
    const double* xi2;
    const double* xi3;
    const double* xi4;
    std::size_t n;
};

using StepFn = void (*)(const StepCoeffs&, const Batch&);

struct KernelTable {
    StepFn euler_maruyama;
    StepFn milstein_paper;
    StepFn milstein_corrected;
    const char* isa;
};

enum class Isa { scalar, avx2, neon };

/// Kernel table for a specific instruction set. Throws if not compiled in
/// or not supported by the running CPU.
const KernelTable& table(Isa isa);

/// Instruction sets compiled into this binary.
std::vector<Isa> compiled_isas();

/// Whether the running CPU can execute the given variant.
bool runtime_supported(Isa isa);

/// Best table for this machine, or a forced override.
const KernelTable& active();
void force_isa(std::optional<Isa> isa);

const char* isa_name(Isa isa);

}  // namespace sirs::kernels
