// NEON batch kernels: two paths per vector, operation order mirroring the
// scalar reference exactly (no fused multiply-add).

#include "sirs/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace sirs::kernels {

namespace {

struct Lanes {
    float64x2_t lambda, beta, eta, mu, gamma, amg, etamu;
    float64x2_t s1, s2, s3, s4, q1, q2, q3, q4, sdt, dt, one;
    explicit Lanes(const StepCoeffs& c)
        : lambda(vdupq_n_f64(c.lambda)),
          beta(vdupq_n_f64(c.beta)),
          eta(vdupq_n_f64(c.eta)),
          mu(vdupq_n_f64(c.mu)),
          gamma(vdupq_n_f64(c.gamma)),
          amg(vdupq_n_f64(c.amg)),
          etamu(vdupq_n_f64(c.etamu)),
          s1(vdupq_n_f64(c.s1)),
          s2(vdupq_n_f64(c.s2)),
          s3(vdupq_n_f64(c.s3)),
          s4(vdupq_n_f64(c.s4)),
          q1(vdupq_n_f64(c.q1)),
          q2(vdupq_n_f64(c.q2)),
          q3(vdupq_n_f64(c.q3)),
          q4(vdupq_n_f64(c.q4)),
          sdt(vdupq_n_f64(c.sdt)),
          dt(vdupq_n_f64(c.dt)),
          one(vdupq_n_f64(1.0)) {}
};

inline void drift_terms(const Lanes& L, float64x2_t x, float64x2_t y, float64x2_t z,
                        float64x2_t xy, float64x2_t& fx, float64x2_t& fy, float64x2_t& fz) {
    fx = vmulq_f64(vsubq_f64(vsubq_f64(vaddq_f64(L.lambda, vmulq_f64(L.eta, z)),
                                       vmulq_f64(L.beta, xy)),
                             vmulq_f64(L.mu, x)),
                   L.dt);
    fy = vmulq_f64(vsubq_f64(vmulq_f64(L.beta, xy), vmulq_f64(L.amg, y)), L.dt);
    fz = vmulq_f64(vsubq_f64(vmulq_f64(L.gamma, y), vmulq_f64(L.etamu, z)), L.dt);
}

inline float64x2_t noise_lin(float64x2_t s, float64x2_t xi, float64x2_t sdt) {
    return vmulq_f64(vmulq_f64(s, xi), sdt);
}

inline float64x2_t noise_milstein(const Lanes& L, float64x2_t s, float64x2_t xi, float64x2_t q) {
    return vaddq_f64(noise_lin(s, xi, L.sdt),
                     vmulq_f64(vsubq_f64(vmulq_f64(xi, xi), L.one), q));
}

void batch_euler_neon(const StepCoeffs& c, const Batch& b) {
    const Lanes L(c);
    std::size_t i = 0;
    for (; i + 2 <= b.n; i += 2) {
        float64x2_t x = vld1q_f64(b.x + i);
        float64x2_t y = vld1q_f64(b.y + i);
        float64x2_t z = vld1q_f64(b.z + i);
        const float64x2_t xy = vmulq_f64(x, y);
        float64x2_t fx, fy, fz;
        drift_terms(L, x, y, z, xy, fx, fy, fz);
        const float64x2_t n1 = noise_lin(L.s1, vld1q_f64(b.xi1 + i), L.sdt);
        const float64x2_t n2 = noise_lin(L.s2, vld1q_f64(b.xi2 + i), L.sdt);
        const float64x2_t n3 = noise_lin(L.s3, vld1q_f64(b.xi3 + i), L.sdt);
        const float64x2_t w4 = vmulq_f64(xy, noise_lin(L.s4, vld1q_f64(b.xi4 + i), L.sdt));
        x = vsubq_f64(vaddq_f64(vaddq_f64(x, fx), vmulq_f64(x, n1)), w4);
        y = vaddq_f64(vaddq_f64(vaddq_f64(y, fy), vmulq_f64(y, n2)), w4);
        z = vaddq_f64(vaddq_f64(z, fz), vmulq_f64(z, n3));
        vst1q_f64(b.x + i, x);
        vst1q_f64(b.y + i, y);
        vst1q_f64(b.z + i, z);
    }
    for (; i < b.n; ++i) {
        step_euler_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i], b.xi4[i]);
    }
}

void batch_milstein_paper_neon(const StepCoeffs& c, const Batch& b) {
    const Lanes L(c);
    std::size_t i = 0;
    for (; i + 2 <= b.n; i += 2) {
        float64x2_t x = vld1q_f64(b.x + i);
        float64x2_t y = vld1q_f64(b.y + i);
        float64x2_t z = vld1q_f64(b.z + i);
        const float64x2_t xy = vmulq_f64(x, y);
        float64x2_t fx, fy, fz;
        drift_terms(L, x, y, z, xy, fx, fy, fz);
        const float64x2_t m1 = noise_milstein(L, L.s1, vld1q_f64(b.xi1 + i), L.q1);
        const float64x2_t m2 = noise_milstein(L, L.s2, vld1q_f64(b.xi2 + i), L.q2);
        const float64x2_t m3 = noise_milstein(L, L.s3, vld1q_f64(b.xi3 + i), L.q3);
        const float64x2_t m4 = noise_milstein(L, L.s4, vld1q_f64(b.xi4 + i), L.q4);
        const float64x2_t w4 = vmulq_f64(xy, m4);
        x = vaddq_f64(vaddq_f64(vaddq_f64(x, fx), vmulq_f64(x, m1)), w4);
        y = vaddq_f64(vaddq_f64(vaddq_f64(y, fy), vmulq_f64(y, m2)), w4);
        z = vaddq_f64(vaddq_f64(z, fz), vmulq_f64(z, m3));
        vst1q_f64(b.x + i, x);
        vst1q_f64(b.y + i, y);
        vst1q_f64(b.z + i, z);
    }
    for (; i < b.n; ++i) {
        step_milstein_paper_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i],
                                b.xi4[i]);
    }
}

void batch_milstein_corrected_neon(const StepCoeffs& c, const Batch& b) {
    const Lanes L(c);
    std::size_t i = 0;
    for (; i + 2 <= b.n; i += 2) {
        float64x2_t x = vld1q_f64(b.x + i);
        float64x2_t y = vld1q_f64(b.y + i);
        float64x2_t z = vld1q_f64(b.z + i);
        const float64x2_t xy = vmulq_f64(x, y);
        float64x2_t fx, fy, fz;
        drift_terms(L, x, y, z, xy, fx, fy, fz);
        const float64x2_t m1 = noise_milstein(L, L.s1, vld1q_f64(b.xi1 + i), L.q1);
        const float64x2_t m2 = noise_milstein(L, L.s2, vld1q_f64(b.xi2 + i), L.q2);
        const float64x2_t m3 = noise_milstein(L, L.s3, vld1q_f64(b.xi3 + i), L.q3);
        const float64x2_t xi4 = vld1q_f64(b.xi4 + i);
        const float64x2_t w4 = vmulq_f64(xy, noise_lin(L.s4, xi4, L.sdt));
        const float64x2_t d4 =
            vmulq_f64(vmulq_f64(xy, vsubq_f64(y, x)),
                      vmulq_f64(vsubq_f64(vmulq_f64(xi4, xi4), L.one), L.q4));
        x = vaddq_f64(vsubq_f64(vaddq_f64(vaddq_f64(x, fx), vmulq_f64(x, m1)), w4), d4);
        y = vsubq_f64(vaddq_f64(vaddq_f64(vaddq_f64(y, fy), vmulq_f64(y, m2)), w4), d4);
        z = vaddq_f64(vaddq_f64(z, fz), vmulq_f64(z, m3));
        vst1q_f64(b.x + i, x);
        vst1q_f64(b.y + i, y);
        vst1q_f64(b.z + i, z);
    }
    for (; i < b.n; ++i) {
        step_milstein_corrected_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i],
                                    b.xi4[i]);
    }
}

}  // namespace

const KernelTable& neon_table() {
    static const KernelTable t{batch_euler_neon, batch_milstein_paper_neon,
                               batch_milstein_corrected_neon, "neon"};
    return t;
}

}  // namespace sirs::kernels

#endif  // __aarch64__
