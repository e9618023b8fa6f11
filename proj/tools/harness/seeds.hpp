#pragma once

#include <cstdint>
#include <string_view>

#include "rcpsp/rng.hpp"

namespace rcpsp::harness {

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

/// Per-run seed for benchmark runs: a pure function of the base seed, the
/// repetition index and the instance id, so worker scheduling cannot affect
/// any result and parallel and serial execution produce identical reports.
inline std::uint64_t derive_run_seed(std::uint64_t base_seed, int repetition,
                                     std::string_view instance_id) {
    std::uint64_t h = mix64(base_seed);
    h = mix64(h ^ (static_cast<std::uint64_t>(repetition) + 0x51ed270b9d5c2c9bULL));
    return mix64(h ^ fnv1a64(instance_id));
}

} // namespace rcpsp::harness
