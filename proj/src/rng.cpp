#include "sirs/rng.hpp"

#include <cmath>
#include <numbers>

namespace sirs::rng {

namespace {

constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kMult1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kBump0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kBump1 = 0xBB67AE8584CAA73Bull;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(prod >> 64);
    lo = static_cast<std::uint64_t>(prod);
}

inline std::array<std::uint64_t, 4> round_once(const std::array<std::uint64_t, 4>& ctr,
                                               const std::array<std::uint64_t, 2>& key) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMult0, ctr[0], hi0, lo0);
    mulhilo(kMult1, ctr[2], hi1, lo1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 2>& key,
                                        const std::array<std::uint64_t, 4>& counter) {
    std::array<std::uint64_t, 4> ctr = counter;
    std::array<std::uint64_t, 2> k = key;
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            k[0] += kBump0;
            k[1] += kBump1;
        }
        ctr = round_once(ctr, k);
    }
    return ctr;
}

std::array<double, 4> normals_from_block(const std::array<std::uint64_t, 4>& block) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double u1 = to_unit_open_closed(block[0]);
    const double a1 = two_pi * to_unit_closed_open(block[1]);
    const double r1 = std::sqrt(-2.0 * std::log(u1));
    const double u2 = to_unit_open_closed(block[2]);
    const double a2 = two_pi * to_unit_closed_open(block[3]);
    const double r2 = std::sqrt(-2.0 * std::log(u2));
    return {r1 * std::cos(a1), r1 * std::sin(a1), r2 * std::cos(a2), r2 * std::sin(a2)};
}

}  // namespace sirs::rng
