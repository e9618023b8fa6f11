#pragma once

#include <cstdint>

namespace rcpsp {

/// Per-form mutation probabilities, sampled independently per individual;
/// applying several forms at once realizes the "combination" form.
struct MutationRates {
    double single_move = 0.05;
    double pair_exchange = 0.05;
    double group_move = 0.02;
};

/// All tunable knobs of a 2PGA run. Phase 1 includes the elite set F in the
/// parent pool; Phase 2 excludes it. The elite sizes are independent per
/// phase (equal by default).
struct GaParams {
    int population_size = 100;
    int parent_count = 40;  // N_p
    int elite_phase1 = 5;   // N_F during phase 1
    int elite_phase2 = 5;   // N_F during phase 2
    int phase1_generations = 5;
    int phase2_generations = 5;
    int tournament_size = 3;
    MutationRates mutation;
    int candidate_list_capacity = 10;
    int deterioration_patience = 4;     // generations before candidate injection
    long long schedule_budget = 5000;   // max SSGS evaluations, checked per generation
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument when any invariant is broken:
    /// elite < parents <= population, population - elite >= parents,
    /// parents >= 2, probabilities in [0,1], budget > 0, at least one
    /// generation across the two phases.
    void validate() const;
};

} // namespace rcpsp
