#include <atomic>
#include <stdexcept>

#include "sirs/kernels.hpp"

namespace sirs::kernels {

const KernelTable& scalar_table();
#if defined(__x86_64__)
const KernelTable& avx2_table();
#endif
#if defined(__aarch64__)
const KernelTable& neon_table();
#endif

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

std::vector<Isa> compiled_isas() {
    std::vector<Isa> v{Isa::scalar};
#if defined(__x86_64__) && defined(SIRS_HAVE_AVX2_TU)
    v.push_back(Isa::avx2);
#endif
#if defined(__aarch64__)
    v.push_back(Isa::neon);
#endif
    return v;
}

bool runtime_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) && defined(SIRS_HAVE_AVX2_TU)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;  // NEON is baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return scalar_table();
        case Isa::avx2:
#if defined(__x86_64__) && defined(SIRS_HAVE_AVX2_TU)
            if (runtime_supported(Isa::avx2)) return avx2_table();
#endif
            break;
        case Isa::neon:
#if defined(__aarch64__)
            return neon_table();
#endif
            break;
    }
    throw std::runtime_error(std::string("kernel variant unavailable: ") + isa_name(isa));
}

namespace {
std::atomic<int> g_forced{-1};

Isa detect() {
#if defined(__x86_64__) && defined(SIRS_HAVE_AVX2_TU)
    if (runtime_supported(Isa::avx2)) return Isa::avx2;
#endif
#if defined(__aarch64__)
    return Isa::neon;
#endif
    return Isa::scalar;
}
}  // namespace

void force_isa(std::optional<Isa> isa) {
    g_forced.store(isa ? static_cast<int>(*isa) : -1);
}

const KernelTable& active() {
    const int forced = g_forced.load();
    if (forced >= 0) return table(static_cast<Isa>(forced));
    static const Isa best = detect();
    return table(best);
}

}  // namespace sirs::kernels
