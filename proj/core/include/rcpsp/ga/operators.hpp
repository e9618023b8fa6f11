#pragma once

#include <utility>
#include <vector>

#include "rcpsp/ga/params.hpp"
#include "rcpsp/instance.hpp"
#include "rcpsp/rng.hpp"

namespace rcpsp {

/// Two-point crossover on activity lists. With cut points 0 < r1 <= r2 <= N,
/// the daughter takes positions 1..r1 from the mother, fills r1+1..r2 with
/// the lowest-position father entries not yet used, and the tail with the
/// lowest-position mother entries past r1 not yet used; the son swaps the
/// parent roles. Both children are precedence-feasible whenever the parents
/// are (under the same direction).
/// Throws std::invalid_argument on out-of-range cut points.
std::pair<ActivityList, ActivityList> two_point_crossover(const ActivityList& mother,
                                                          const ActivityList& father, int r1,
                                                          int r2);

/// Repairs a (possibly infeasible) permutation with pinned dummies: scans
/// left to right and moves each activity that precedes one of its
/// predecessors to just after the rightmost of them, until a clean pass.
/// Activities already ordered consistently keep their relative order.
ActivityList repair(std::vector<int> order, const ProjectInstance& instance);

/// Applies the configured mutation forms (single relocation, pair exchange,
/// contiguous block move of length 2..min(5, N)), each with its own
/// probability; dummies never move. If the mutated permutation violates
/// precedence it is repaired, so the output is always feasible.
ActivityList mutate(const ActivityList& al, const ProjectInstance& instance,
                    const MutationRates& rates, Rng& rng);

} // namespace rcpsp
