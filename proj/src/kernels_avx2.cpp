// AVX2 batch kernels: four paths per vector. Operation order mirrors the
// scalar reference functions exactly (mul/add/sub only, no FMA), so every
// lane is bit-identical to the scalar result. Compiled with -mavx2 in its
// own translation unit; selected at runtime.

#include "sirs/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace sirs::kernels {

namespace {

struct Lanes {
    __m256d lambda, beta, eta, mu, gamma, amg, etamu;
    __m256d s1, s2, s3, s4, q1, q2, q3, q4, sdt, dt, one;
    explicit Lanes(const StepCoeffs& c)
        : lambda(_mm256_set1_pd(c.lambda)),
          beta(_mm256_set1_pd(c.beta)),
          eta(_mm256_set1_pd(c.eta)),
          mu(_mm256_set1_pd(c.mu)),
          gamma(_mm256_set1_pd(c.gamma)),
          amg(_mm256_set1_pd(c.amg)),
          etamu(_mm256_set1_pd(c.etamu)),
          s1(_mm256_set1_pd(c.s1)),
          s2(_mm256_set1_pd(c.s2)),
          s3(_mm256_set1_pd(c.s3)),
          s4(_mm256_set1_pd(c.s4)),
          q1(_mm256_set1_pd(c.q1)),
          q2(_mm256_set1_pd(c.q2)),
          q3(_mm256_set1_pd(c.q3)),
          q4(_mm256_set1_pd(c.q4)),
          sdt(_mm256_set1_pd(c.sdt)),
          dt(_mm256_set1_pd(c.dt)),
          one(_mm256_set1_pd(1.0)) {}
};

// fx = (lambda + eta*z - beta*xy - mu*x) * dt, etc.
inline void drift_terms(const Lanes& L, __m256d x, __m256d y, __m256d z, __m256d xy,
                        __m256d& fx, __m256d& fy, __m256d& fz) {
    fx = _mm256_mul_pd(
        _mm256_sub_pd(_mm256_sub_pd(_mm256_add_pd(L.lambda, _mm256_mul_pd(L.eta, z)),
                                    _mm256_mul_pd(L.beta, xy)),
                      _mm256_mul_pd(L.mu, x)),
        L.dt);
    fy = _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(L.beta, xy), _mm256_mul_pd(L.amg, y)), L.dt);
    fz = _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(L.gamma, y), _mm256_mul_pd(L.etamu, z)),
                       L.dt);
}

// si*xi*sdt
inline __m256d noise_lin(__m256d s, __m256d xi, __m256d sdt) {
    return _mm256_mul_pd(_mm256_mul_pd(s, xi), sdt);
}

// si*xi*sdt + (xi*xi - 1)*qi
inline __m256d noise_milstein(const Lanes& L, __m256d s, __m256d xi, __m256d q) {
    return _mm256_add_pd(noise_lin(s, xi, L.sdt),
                         _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(xi, xi), L.one), q));
}

void batch_euler_avx2(const StepCoeffs& c, const Batch& b) {
    const Lanes L(c);
    std::size_t i = 0;
    for (; i + 4 <= b.n; i += 4) {
        __m256d x = _mm256_loadu_pd(b.x + i);
        __m256d y = _mm256_loadu_pd(b.y + i);
        __m256d z = _mm256_loadu_pd(b.z + i);
        const __m256d xy = _mm256_mul_pd(x, y);
        __m256d fx, fy, fz;
        drift_terms(L, x, y, z, xy, fx, fy, fz);
        const __m256d n1 = noise_lin(L.s1, _mm256_loadu_pd(b.xi1 + i), L.sdt);
        const __m256d n2 = noise_lin(L.s2, _mm256_loadu_pd(b.xi2 + i), L.sdt);
        const __m256d n3 = noise_lin(L.s3, _mm256_loadu_pd(b.xi3 + i), L.sdt);
        const __m256d w4 = _mm256_mul_pd(xy, noise_lin(L.s4, _mm256_loadu_pd(b.xi4 + i), L.sdt));
        x = _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(x, fx), _mm256_mul_pd(x, n1)), w4);
        y = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(y, fy), _mm256_mul_pd(y, n2)), w4);
        z = _mm256_add_pd(_mm256_add_pd(z, fz), _mm256_mul_pd(z, n3));
        _mm256_storeu_pd(b.x + i, x);
        _mm256_storeu_pd(b.y + i, y);
        _mm256_storeu_pd(b.z + i, z);
    }
    for (; i < b.n; ++i) {
        step_euler_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i], b.xi4[i]);
    }
}

void batch_milstein_paper_avx2(const StepCoeffs& c, const Batch& b) {
    const Lanes L(c);
    std::size_t i = 0;
    for (; i + 4 <= b.n; i += 4) {
        __m256d x = _mm256_loadu_pd(b.x + i);
        __m256d y = _mm256_loadu_pd(b.y + i);
        __m256d z = _mm256_loadu_pd(b.z + i);
        const __m256d xy = _mm256_mul_pd(x, y);
        __m256d fx, fy, fz;
        drift_terms(L, x, y, z, xy, fx, fy, fz);
        const __m256d m1 = noise_milstein(L, L.s1, _mm256_loadu_pd(b.xi1 + i), L.q1);
        const __m256d m2 = noise_milstein(L, L.s2, _mm256_loadu_pd(b.xi2 + i), L.q2);
        const __m256d m3 = noise_milstein(L, L.s3, _mm256_loadu_pd(b.xi3 + i), L.q3);
        const __m256d m4 = noise_milstein(L, L.s4, _mm256_loadu_pd(b.xi4 + i), L.q4);
        const __m256d w4 = _mm256_mul_pd(xy, m4);
        x = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(x, fx), _mm256_mul_pd(x, m1)), w4);
        y = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(y, fy), _mm256_mul_pd(y, m2)), w4);
        z = _mm256_add_pd(_mm256_add_pd(z, fz), _mm256_mul_pd(z, m3));
        _mm256_storeu_pd(b.x + i, x);
        _mm256_storeu_pd(b.y + i, y);
        _mm256_storeu_pd(b.z + i, z);
    }
    for (; i < b.n; ++i) {
        step_milstein_paper_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i],
                                b.xi4[i]);
    }
}

void batch_milstein_corrected_avx2(const StepCoeffs& c, const Batch& b) {
    const Lanes L(c);
    std::size_t i = 0;
    for (; i + 4 <= b.n; i += 4) {
        __m256d x = _mm256_loadu_pd(b.x + i);
        __m256d y = _mm256_loadu_pd(b.y + i);
        __m256d z = _mm256_loadu_pd(b.z + i);
        const __m256d xy = _mm256_mul_pd(x, y);
        __m256d fx, fy, fz;
        drift_terms(L, x, y, z, xy, fx, fy, fz);
        const __m256d m1 = noise_milstein(L, L.s1, _mm256_loadu_pd(b.xi1 + i), L.q1);
        const __m256d m2 = noise_milstein(L, L.s2, _mm256_loadu_pd(b.xi2 + i), L.q2);
        const __m256d m3 = noise_milstein(L, L.s3, _mm256_loadu_pd(b.xi3 + i), L.q3);
        const __m256d xi4 = _mm256_loadu_pd(b.xi4 + i);
        const __m256d w4 = _mm256_mul_pd(xy, noise_lin(L.s4, xi4, L.sdt));
        const __m256d d4 = _mm256_mul_pd(
            _mm256_mul_pd(xy, _mm256_sub_pd(y, x)),
            _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(xi4, xi4), L.one), L.q4));
        x = _mm256_add_pd(
            _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(x, fx), _mm256_mul_pd(x, m1)), w4), d4);
        y = _mm256_sub_pd(
            _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(y, fy), _mm256_mul_pd(y, m2)), w4), d4);
        z = _mm256_add_pd(_mm256_add_pd(z, fz), _mm256_mul_pd(z, m3));
        _mm256_storeu_pd(b.x + i, x);
        _mm256_storeu_pd(b.y + i, y);
        _mm256_storeu_pd(b.z + i, z);
    }
    for (; i < b.n; ++i) {
        step_milstein_corrected_one(c, b.x[i], b.y[i], b.z[i], b.xi1[i], b.xi2[i], b.xi3[i],
                                    b.xi4[i]);
    }
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{batch_euler_avx2, batch_milstein_paper_avx2,
                               batch_milstein_corrected_avx2, "avx2"};
    return t;
}

}  // namespace sirs::kernels

#endif  // __AVX2__
