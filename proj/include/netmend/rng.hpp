#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace netmend {

// All randomness in the toolkit flows through a seeded mt19937_64. The raw
// draw helpers below avoid std::uniform_*_distribution so that a seed
// reproduces the same byte-identical run on every platform.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{seed, stream};
    return Rng(seq);
}

// One stream per consumer, so a single run seed drives every stage without
// the stages sharing draws.
namespace stream {
inline constexpr std::uint64_t generator = 0;
inline constexpr std::uint64_t transactions = 1;
inline constexpr std::uint64_t attack = 2;
inline constexpr std::uint64_t restore = 3;  // shared by strategic and budget
inline constexpr std::uint64_t baseline = 4;
}  // namespace stream

/// Unbiased draw from [0, n). n must be > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % n;
    }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Inclusive integer draw from [lo, hi].
inline std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_index(rng, hi - lo + 1);
}

// Fisher-Yates; std::shuffle is implementation-defined, this is not.
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace netmend
