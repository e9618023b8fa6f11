#pragma once

#include "rcpsp/instance.hpp"
#include "rcpsp/rng.hpp"
#include "rcpsp/schedule.hpp"

namespace rcpsp {

/// True iff every activity appears after all of its immediate predecessors.
/// Throws std::invalid_argument if al is not a permutation of 0..n_real+1.
bool is_precedence_feasible(const ProjectInstance& instance, const ActivityList& al);

/// Serial schedule generation scheme: walks the activity list in order and
/// starts each activity at the earliest time >= its predecessors' max finish
/// at which every resource can cover its requirement for the whole duration.
///
/// Candidate starts are scanned at event points (predecessor finishes and
/// scheduled-activity finishes), which provably yields the same schedule as a
/// per-time-unit scan. Pure and deterministic.
/// Throws std::invalid_argument on a precedence-infeasible list (caller bug).
Schedule ssgs_decode(const ProjectInstance& instance, const ActivityList& al);

/// Uniformly randomized topological order: keeps the eligible set E, picks
/// uniformly from it, ends with the sink dummy.
ActivityList random_activity_list(const ProjectInstance& instance, Rng& rng);

/// Reverses every precedence edge and swaps the dummy roles, relabelled so
/// the result again has dummy 0 as unique source. Durations, capacities and
/// requirements are untouched; the direction flag flips.
ProjectInstance reverse_precedence(const ProjectInstance& instance);

/// Maps a schedule of `decoded_on` to the opposite-direction instance:
/// s'_j = T - f_j, f'_j = T - s_j per activity with the dummy labels swapped.
/// Same makespan; a feasible input yields a feasible output.
Schedule mirror_schedule(const Schedule& schedule, const ProjectInstance& decoded_on);

/// Longest duration-weighted source->sink path, ignoring resources.
/// Every feasible makespan is >= this bound.
int critical_path_lower_bound(const ProjectInstance& instance);

} // namespace rcpsp
