#pragma once

#include <vector>

#include "rcpsp/ga/params.hpp"
#include "rcpsp/ga/solver_types.hpp"
#include "rcpsp/rng.hpp"

namespace rcpsp {

/// Splits the population into the elite set F (the elite_size members with
/// smallest fitness, ties broken by earlier population position) and the
/// remainder POP \ F. Returns member indices, each part in population order.
/// Throws std::invalid_argument when elite_size >= population size.
std::pair<std::vector<int>, std::vector<int>> partition_population(const Population& pop,
                                                                   int elite_size);

/// Parent selection for one generation, as member indices.
/// Phase 1: every elite member exactly once plus (N_p - N_F) tournament
/// winners from POP \ F. Phase 2: N_p tournament winners from POP \ F, elite
/// excluded entirely. Tournaments draw tournament_size members uniformly with
/// replacement and keep the lowest fitness; parents may repeat.
std::vector<int> select_parents(const Population& pop, int phase, const GaParams& params,
                                Rng& rng);

} // namespace rcpsp
