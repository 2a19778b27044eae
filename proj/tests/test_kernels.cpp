#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "sirs/kernels.hpp"

using namespace sirs;
using namespace sirs::kernels;

namespace {

const ModelParams kParams{0.33, 0.013, 0.023, 0.006, 0.04, 0.006};

struct BatchData {
    std::vector<double> x, y, z, xi1, xi2, xi3, xi4;
    explicit BatchData(std::size_t n, std::mt19937_64& gen)
        : x(n), y(n), z(n), xi1(n), xi2(n), xi3(n), xi4(n) {
        std::uniform_real_distribution<double> u(0.01, 80.0);
        std::normal_distribution<double> g(0.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = u(gen);
            y[i] = u(gen);
            z[i] = u(gen);
            xi1[i] = g(gen);
            xi2[i] = g(gen);
            xi3[i] = g(gen);
            xi4[i] = g(gen);
        }
    }
    Batch view() { return Batch{x.data(), y.data(), z.data(), xi1.data(), xi2.data(),
                                xi3.data(), xi4.data(), x.size()}; }
};

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

void check_variant_matches_scalar(Isa isa) {
    const KernelTable& ref = table(Isa::scalar);
    const KernelTable& alt = table(isa);
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> sig(0.0, 0.4);
    // batch sizes straddling the vector width, including remainders
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4},
                          std::size_t{5}, std::size_t{7}, std::size_t{8}, std::size_t{16},
                          std::size_t{67}}) {
        for (int rep = 0; rep < 50; ++rep) {
            const NoiseIntensities noise{sig(gen), sig(gen), sig(gen), sig(gen)};
            const StepCoeffs c = StepCoeffs::make(kParams, noise, 0.05);
            BatchData d0(n, gen);
            BatchData d1 = d0;
            StepFn fns_ref[3] = {ref.euler_maruyama, ref.milstein_paper,
                                 ref.milstein_corrected};
            StepFn fns_alt[3] = {alt.euler_maruyama, alt.milstein_paper,
                                 alt.milstein_corrected};
            for (int s = 0; s < 3; ++s) {
                BatchData a = d0;
                BatchData b = d1;
                fns_ref[s](c, a.view());
                fns_alt[s](c, b.view());
                CHECK(same_bits(a.x, b.x));
                CHECK(same_bits(a.y, b.y));
                CHECK(same_bits(a.z, b.z));
            }
        }
    }
}

}  // namespace

TEST_CASE("scalar batch kernel equals the per-path reference functions") {
    const KernelTable& t = table(Isa::scalar);
    std::mt19937_64 gen(5);
    const NoiseIntensities noise{0.02, 0.01, 0.03, 0.015};
    const StepCoeffs c = StepCoeffs::make(kParams, noise, 0.1);
    BatchData d(33, gen);
    BatchData ref = d;
    t.milstein_corrected(c, d.view());
    for (std::size_t i = 0; i < ref.x.size(); ++i) {
        step_milstein_corrected_one(c, ref.x[i], ref.y[i], ref.z[i], ref.xi1[i], ref.xi2[i],
                                    ref.xi3[i], ref.xi4[i]);
    }
    CHECK(same_bits(d.x, ref.x));
    CHECK(same_bits(d.y, ref.y));
    CHECK(same_bits(d.z, ref.z));
}

TEST_CASE("SIMD variants are bit-identical to the scalar reference") {
    bool tested_any = false;
    for (Isa isa : compiled_isas()) {
        if (isa == Isa::scalar || !runtime_supported(isa)) continue;
        INFO("variant: ", isa_name(isa));
        check_variant_matches_scalar(isa);
        tested_any = true;
    }
    if (!tested_any) {
        MESSAGE("no SIMD variant available on this machine; scalar only");
    }
}

TEST_CASE("dispatch selects a supported variant and can be forced") {
    const KernelTable& chosen = active();
    bool found = false;
    for (Isa isa : compiled_isas()) {
        if (std::string(isa_name(isa)) == chosen.isa) found = runtime_supported(isa);
    }
    CHECK(found);

    force_isa(Isa::scalar);
    CHECK(std::string(active().isa) == "scalar");
    force_isa(std::nullopt);
    CHECK(std::string(active().isa) == chosen.isa);

    CHECK_THROWS(table(static_cast<Isa>(42)));
}
