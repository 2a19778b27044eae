#pragma once
// Counter-based random numbers for reproducible, schedule-independent
// Monte Carlo: Philox4x64-10 blocks keyed by (seed, path index), one block
// per time step, transformed to four standard normals by Box-Muller.
// Identical (seed, path, step) triples yield identical draws regardless of
// how paths are scheduled across threads.

#include <array>
#include <cstdint>

namespace sirs::rng {

/// One Philox4x64-10 block: 4 x 64-bit words from (key, counter).
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 2>& key,
                                        const std::array<std::uint64_t, 4>& counter);

/// Map a 64-bit word to (0, 1]: ((w >> 11) + 1) * 2^-53.
inline double to_unit_open_closed(std::uint64_t w) {
    return static_cast<double>((w >> 11) + 1) * 0x1.0p-53;
}

/// Map a 64-bit word to [0, 1): (w >> 11) * 2^-53.
inline double to_unit_closed_open(std::uint64_t w) {
    return static_cast<double>(w >> 11) * 0x1.0p-53;
}

/// Four standard normals from one Philox block (two Box-Muller pairs).
std::array<double, 4> normals_from_block(const std::array<std::uint64_t, 4>& block);

/// Per-path substream: key = (seed, path). Draw order within a step is fixed.
class PathStream {
public:
    PathStream(std::uint64_t seed, std::uint64_t path) : key_{seed, path} {}

    /// The four N(0,1) draws consumed by time step `step`, in channel order.
    std::array<double, 4> normals(std::uint64_t step) const {
        return normals_from_block(philox4x64(key_, {step, 0, 0, 0}));
    }

    std::array<std::uint64_t, 4> raw_block(std::uint64_t step) const {
        return philox4x64(key_, {step, 0, 0, 0});
    }

private:
    std::array<std::uint64_t, 2> key_;
};

}  // namespace sirs::rng
