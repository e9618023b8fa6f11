#include "rcpsp/ga/params.hpp"

#include <stdexcept>

namespace rcpsp {

namespace {

void require(bool ok, const char* message) {
    if (!ok)
        throw std::invalid_argument(message);
}

void check_rate(double rate, const char* message) {
    require(rate >= 0.0 && rate <= 1.0, message);
}

} // namespace

void GaParams::validate() const {
    require(population_size >= 2, "population_size must be at least 2");
    require(parent_count >= 2, "parent_count must be at least 2");
    require(parent_count <= population_size, "parent_count must not exceed population_size");
    for (int elite : {elite_phase1, elite_phase2}) {
        require(elite >= 0, "elite size must be non-negative");
        require(elite < parent_count, "elite size must be smaller than parent_count");
        require(population_size - elite >= parent_count,
                "population_size - elite size must cover parent_count (phase 2 draws all "
                "parents from POP \\ F)");
    }
    require(phase1_generations >= 0 && phase2_generations >= 0,
            "phase generation counts must be non-negative");
    require(phase1_generations + phase2_generations >= 1,
            "at least one generation across the two phases");
    require(tournament_size >= 1, "tournament_size must be at least 1");
    check_rate(mutation.single_move, "mutation.single_move must be in [0,1]");
    check_rate(mutation.pair_exchange, "mutation.pair_exchange must be in [0,1]");
    check_rate(mutation.group_move, "mutation.group_move must be in [0,1]");
    require(candidate_list_capacity >= 1, "candidate_list_capacity must be at least 1");
    require(deterioration_patience >= 0, "deterioration_patience must be non-negative");
    require(schedule_budget > 0, "schedule_budget must be positive");
}

} // namespace rcpsp
