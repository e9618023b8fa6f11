#pragma once

#include "rcpsp/ga/params.hpp"
#include "rcpsp/ga/solver_types.hpp"
#include "rcpsp/instance.hpp"
#include "rcpsp/rng.hpp"
#include "rcpsp/schedule.hpp"

namespace rcpsp {

/// Everything a single 2PGA run owns. A run is strictly sequential and
/// deterministic given its seed; separate runs share nothing mutable.
struct RunState {
    ProjectInstance forward;
    ProjectInstance backward;
    Population population;
    std::vector<Schedule> schedules;  // decode cache, parallel to population
    CandidateList candidates;
    Rng rng;
    long long schedules_evaluated = 0;
    long long generations_run = 0;
    int deterioration_run = 0;  // consecutive generations with pop best worse than list best
    bool budget_exhausted = false;
    std::vector<int> fitness_trace;

    const ProjectInstance& current_instance() const {
        return population.direction == Direction::forward ? forward : backward;
    }
};

/// Re-encodes a schedule as an activity list for the opposite-direction
/// instance: real activities by decreasing finish time (ties by activity
/// index) between the pinned dummies. If zero-duration ties make that order
/// infeasible for `target`, it is repaired; otherwise it is returned as is.
ActivityList justify_reencode(const Schedule& schedule, const ProjectInstance& target);

/// Breeds a full replacement population: repeatedly crossing two distinct
/// uniformly drawn parents at ordered uniform cut points until
/// population_size children exist (one surplus child dropped when the size is
/// odd), then mutating every child. Children are unevaluated.
/// Throws std::invalid_argument with fewer than two parents.
Population next_generation(const Population& pop, const std::vector<Individual>& parents,
                           const ProjectInstance& instance, const GaParams& params, Rng& rng);

/// Seeds the rng, builds and evaluates the initial random population and
/// primes the candidate list. Counts the initial decodes.
RunState init_run_state(const ProjectInstance& instance, const GaParams& params);

/// Runs the configured number of generations for one phase. Per generation:
/// select parents (phase rule) -> breed -> evaluate (counted against the
/// budget) -> update the candidate list (converted to forward orientation
/// when the direction is reversed) -> reverse the precedence direction and
/// re-encode every chromosome for it. Returns immediately with the
/// budget_exhausted flag once the budget is consumed.
void phase_iteration(RunState& state, int phase, const GaParams& params);

/// When the population best has been strictly worse than the candidate-list
/// best for deterioration_patience consecutive generations, replaces the
/// worst min(list size, elite_phase1) members with the list's best entries
/// converted to the population's direction; otherwise a no-op.
void inject_candidates(RunState& state, const GaParams& params);

/// The full 2PGA: initial population, then {phase 1, phase 2, candidate
/// injection} until the schedule budget is exhausted. The result's best is
/// the candidate-list head with its forward schedule (validated before
/// return).
RunResult run_2pga(const ProjectInstance& instance, const GaParams& params);

} // namespace rcpsp
