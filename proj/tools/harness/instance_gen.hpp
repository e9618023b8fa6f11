#pragma once

#include <cstdint>
#include <string>

#include "rcpsp/instance.hpp"

namespace rcpsp::harness {

/// Knobs for the synthetic PSPLIB-format instance generator. Precedence is
/// sampled in topological numbering (predecessors among nearby lower
/// activities), requests sparsely per resource, capacities scaled off the
/// average demand rate so instances are constrained but always feasible.
struct GenConfig {
    std::string name = "generated";
    int n_real = 30;
    int n_resources = 4;
    int max_duration = 10;
    int max_request = 10;
    double request_probability = 0.5;
    int max_predecessors = 3;
    int locality_window = 12;
    std::uint64_t seed = 1;
};

/// Deterministic for a given config (portable rng helpers only).
ProjectInstance generate_instance(const GenConfig& config);

/// Renders an instance in the PSPLIB single-mode `.sm` layout; round-trips
/// through parse_instance.
std::string render_sm(const ProjectInstance& instance);

} // namespace rcpsp::harness
