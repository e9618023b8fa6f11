#include "rcpsp/ga/selection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rcpsp {

std::pair<std::vector<int>, std::vector<int>> partition_population(const Population& pop,
                                                                   int elite_size) {
    const int size = pop.size();
    if (elite_size >= size)
        throw std::invalid_argument("partition_population: elite_size must be below |pop|");
    if (elite_size < 0)
        throw std::invalid_argument("partition_population: negative elite_size");

    std::vector<int> by_fitness(size);
    std::iota(by_fitness.begin(), by_fitness.end(), 0);
    // stable: ties keep population order
    std::stable_sort(by_fitness.begin(), by_fitness.end(), [&](int a, int b) {
        return pop.members[a].fitness < pop.members[b].fitness;
    });

    std::vector<char> is_elite(size, 0);
    for (int i = 0; i < elite_size; ++i)
        is_elite[by_fitness[i]] = 1;

    std::vector<int> elite, rest;
    elite.reserve(elite_size);
    rest.reserve(size - elite_size);
    for (int i = 0; i < size; ++i)
        (is_elite[i] ? elite : rest).push_back(i);
    return {std::move(elite), std::move(rest)};
}

namespace {

int tournament_winner(const Population& pop, const std::vector<int>& pool, int tournament_size,
                      Rng& rng) {
    int best = pool[rng_below(rng, pool.size())];
    for (int round = 1; round < tournament_size; ++round) {
        const int contender = pool[rng_below(rng, pool.size())];
        if (pop.members[contender].fitness < pop.members[best].fitness)
            best = contender;
    }
    return best;
}

} // namespace

std::vector<int> select_parents(const Population& pop, int phase, const GaParams& params,
                                Rng& rng) {
    if (phase != 1 && phase != 2)
        throw std::invalid_argument("select_parents: phase must be 1 or 2");
    const int elite_size = phase == 1 ? params.elite_phase1 : params.elite_phase2;
    auto [elite, rest] = partition_population(pop, elite_size);

    std::vector<int> parents;
    parents.reserve(params.parent_count);
    if (phase == 1)
        parents = elite;  // every elite member exactly once

    while (static_cast<int>(parents.size()) < params.parent_count)
        parents.push_back(tournament_winner(pop, rest, params.tournament_size, rng));
    return parents;
}

} // namespace rcpsp
