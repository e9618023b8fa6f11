#pragma once

#include <cstdint>
#include <random>

namespace rcpsp {

/// All stochastic code draws from one seeded mt19937_64. The helpers below
/// avoid std::uniform_*_distribution on purpose: the engine's output stream is
/// standardized but the distributions are not, and seeded runs must be
/// bit-reproducible across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n). n must be positive.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
    // rejection sampling; bias-free
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Uniform integer in [lo, hi] inclusive.
inline int rng_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double rng_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// splitmix64 finalizer; used to whiten derived seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace rcpsp
