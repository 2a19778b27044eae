#include <cmath>

#include "sirs/kernels.hpp"

namespace sirs::kernels {

StepCoeffs StepCoeffs::make(const ModelParams& p, const NoiseIntensities& n, double dt) {
    StepCoeffs c;
    c.lambda = p.lambda;
    c.beta = p.beta;
    c.eta = p.eta;
    c.mu = p.mu;
    c.gamma = p.gamma;
    c.amg = p.alpha + p.mu + p.gamma;
    c.etamu = p.eta + p.mu;
    c.s1 = n.sigma1;
    c.s2 = n.sigma2;
    c.s3 = n.sigma3;
    c.s4 = n.sigma4;
    c.q1 = 0.5 * (n.sigma1 * n.sigma1) * dt;
    c.q2 = 0.5 * (n.sigma2 * n.sigma2) * dt;
    c.q3 = 0.5 * (n.sigma3 * n.sigma3) * dt;
    c.q4 = 0.5 * (n.sigma4 * n.sigma4) * dt;
    c.sdt = std::sqrt(dt);
    c.dt = dt;
    return c;
}

namespace {

void batch_euler_scalar(const StepCoeffs& c, const Batch& b) {
    for (std::size_t i = 0; i < b.n; ++i) {
        step_euler_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i], b.xi4[i]);
    }
}

void batch_milstein_paper_scalar(const StepCoeffs& c, const Batch& b) {
    for (std::size_t i = 0; i < b.n; ++i) {
        step_milstein_paper_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i],
                                b.xi4[i]);
    }
}

void batch_milstein_corrected_scalar(const StepCoeffs& c, const Batch& b) {
    for (std::size_t i = 0; i < b.n; ++i) {
        step_milstein_corrected_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i],
                                    b.xi4[i]);
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{batch_euler_scalar, batch_milstein_paper_scalar,
                               batch_milstein_corrected_scalar, "scalar"};
    return t;
}

}  // namespace sirs::kernels
