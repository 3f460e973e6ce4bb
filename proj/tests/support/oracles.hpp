#pragma once

// Test-side reference implementations, independent of the library paths they
// check. Expected values in the test files were produced by these.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "blc/codec.hpp"
#include "blc/statevec.hpp"

namespace oracle {

// |gamma(n)| by counting: 2*floor(log2 n) + 1
inline unsigned gamma_length(std::uint64_t n) {
    unsigned floor_log2 = 0;
    for (std::uint64_t v = n; v > 1; v >>= 1) ++floor_log2;
    return 2 * floor_log2 + 1;
}

// splitmix64: fixed byte generator for frozen golden values
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::vector<std::uint8_t> random_bytes(std::size_t count, std::uint64_t seed) {
    std::vector<std::uint8_t> out(count);
    std::uint64_t state = seed;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<std::uint8_t>(splitmix64(state) & 0xff);
    }
    return out;
}

struct SweepChoice {
    std::uint64_t bits = 0;
    std::size_t r = 0;
    unsigned b = 0;
    double distortion = 0.0;
};

// Literal exhaustive rate/distortion sweep: encode, decode, measure the
// signal-domain relative error, keep the shortest feasible stream (ties to
// smaller R, then smaller b). This is the ground truth for minimal_encoding.
inline std::optional<SweepChoice> sweep(const blc::StateVector& signal, double budget) {
    std::optional<SweepChoice> best;
    const std::size_t n = signal.dimension();
    for (std::size_t r = 1; r <= n; ++r) {
        for (unsigned b = 4; b <= 32; b += 2) {
            const blc::codec::CodecParams params{n, r, b};
            const blc::codec::CodeStream stream = blc::codec::encode(signal, params);
            const blc::StateVector decoded = blc::codec::decode(stream);
            const double rel = blc::codec::relative_distortion(decoded, signal);
            if (rel <= budget && (!best || stream.bit_length < best->bits)) {
                best = SweepChoice{stream.bit_length, r, b, rel};
            }
        }
    }
    return best;
}

}  // namespace oracle
