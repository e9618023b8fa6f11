#include "rcpsp/ga/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rcpsp/ga/operators.hpp"
#include "rcpsp/ga/selection.hpp"
#include "rcpsp/ssgs.hpp"

namespace rcpsp {

bool CandidateList::offer(Individual individual, Schedule schedule) {
    for (const auto& entry : entries_)
        if (entry.individual.chromosome == individual.chromosome)
            return false;

    auto at = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& entry) {
        return individual.fitness < entry.individual.fitness;
    });
    entries_.insert(at, Entry{std::move(individual), std::move(schedule)});
    if (static_cast<int>(entries_.size()) > capacity_)
        entries_.pop_back();
    return true;
}

ActivityList justify_reencode(const Schedule& schedule, const ProjectInstance& target) {
    const int n = target.total_activities();
    const int sink = target.sink();

    std::vector<int> reals(n - 2);
    std::iota(reals.begin(), reals.end(), 1);
    // decreasing finish in the source schedule; ties by activity index
    std::stable_sort(reals.begin(), reals.end(), [&](int a, int b) {
        if (schedule.finishes[a] != schedule.finishes[b])
            return schedule.finishes[a] > schedule.finishes[b];
        return a < b;
    });

    ActivityList al;
    al.order.reserve(n);
    al.order.push_back(0);
    al.order.insert(al.order.end(), reals.begin(), reals.end());
    al.order.push_back(sink);

    // Zero-duration finish ties can invert an edge; repair only then.
    if (!is_precedence_feasible(target, al))
        return repair(std::move(al.order), target);
    return al;
}

namespace {

const ProjectInstance& instance_for(const RunState& state, Direction direction) {
    return direction == Direction::forward ? state.forward : state.backward;
}

int best_member(const Population& pop) {
    int best = 0;
    for (int i = 1; i < pop.size(); ++i)
        if (pop.members[i].fitness < pop.members[best].fitness)
            best = i;
    return best;
}

void evaluate_population(RunState& state) {
    const ProjectInstance& instance = state.current_instance();
    state.schedules.resize(state.population.members.size());
    for (int i = 0; i < state.population.size(); ++i) {
        auto& member = state.population.members[i];
        state.schedules[i] = ssgs_decode(instance, member.chromosome);
        ++state.schedules_evaluated;
        member.fitness = state.schedules[i].makespan;
        member.evaluated = true;
    }
}

// Feeds the generation best into the candidate list, re-expressed in forward
// orientation when the population runs reversed (costs one counted decode).
void offer_generation_best(RunState& state) {
    const int best = best_member(state.population);
    const Individual& individual = state.population.members[best];
    if (state.population.direction == Direction::forward) {
        state.candidates.offer(individual, state.schedules[best]);
        return;
    }
    ActivityList forward_al = justify_reencode(state.schedules[best], state.forward);
    Schedule forward_schedule = ssgs_decode(state.forward, forward_al);
    ++state.schedules_evaluated;
    Individual forward_individual{std::move(forward_al), forward_schedule.makespan,
                                  Direction::forward, true};
    state.candidates.offer(std::move(forward_individual), std::move(forward_schedule));
}

void note_generation(RunState& state) {
    ++state.generations_run;
    state.fitness_trace.push_back(state.candidates.best().individual.fitness);
    const int pop_best = state.population.members[best_member(state.population)].fitness;
    if (pop_best > state.candidates.best().individual.fitness)
        ++state.deterioration_run;
    else
        state.deterioration_run = 0;
}

// Step 1.6: flip the precedence direction and re-encode every chromosome for
// it from its cached schedule. Fitness values carry over (each is the
// makespan of the individual's mirrored schedule); the evaluated flag drops.
void reverse_population(RunState& state) {
    const Direction flipped = opposite(state.population.direction);
    const ProjectInstance& target = instance_for(state, flipped);
    for (int i = 0; i < state.population.size(); ++i) {
        auto& member = state.population.members[i];
        member.chromosome = justify_reencode(state.schedules[i], target);
        member.direction = flipped;
        member.evaluated = false;
    }
    state.population.direction = flipped;
}

} // namespace

Population next_generation(const Population& pop, const std::vector<Individual>& parents,
                           const ProjectInstance& instance, const GaParams& params, Rng& rng) {
    if (parents.size() < 2)
        throw std::invalid_argument("next_generation: need at least two parents");
    const int real_count = instance.n_real;
    if (real_count < 1)
        throw std::invalid_argument("next_generation: no real activities to cross over");

    Population next;
    next.direction = pop.direction;
    next.members.reserve(params.population_size);

    while (static_cast<int>(next.members.size()) < params.population_size) {
        const auto a = rng_below(rng, parents.size());
        auto b = rng_below(rng, parents.size() - 1);
        if (b >= a)
            ++b;  // two distinct parent slots
        int r1 = rng_int(rng, 1, real_count);
        int r2 = rng_int(rng, 1, real_count);
        if (r1 > r2)
            std::swap(r1, r2);

        auto [daughter, son] =
            two_point_crossover(parents[a].chromosome, parents[b].chromosome, r1, r2);
        next.members.push_back(Individual{std::move(daughter), -1, pop.direction, false});
        if (static_cast<int>(next.members.size()) < params.population_size)
            next.members.push_back(Individual{std::move(son), -1, pop.direction, false});
    }

    for (auto& member : next.members)
        member.chromosome = mutate(member.chromosome, instance, params.mutation, rng);
    return next;
}

RunState init_run_state(const ProjectInstance& instance, const GaParams& params) {
    params.validate();
    if (instance.direction != Direction::forward)
        throw std::invalid_argument("run_2pga: instance must be forward-oriented");

    RunState state;
    state.forward = instance;
    state.backward = reverse_precedence(instance);
    state.rng.seed(params.seed);
    state.candidates = CandidateList(params.candidate_list_capacity);

    state.population.direction = Direction::forward;
    state.population.members.reserve(params.population_size);
    for (int i = 0; i < params.population_size; ++i)
        state.population.members.push_back(
            Individual{random_activity_list(instance, state.rng), -1, Direction::forward, false});

    evaluate_population(state);
    offer_generation_best(state);
    state.fitness_trace.push_back(state.candidates.best().individual.fitness);
    return state;
}

void phase_iteration(RunState& state, int phase, const GaParams& params) {
    const int generations = phase == 1 ? params.phase1_generations : params.phase2_generations;
    for (int g = 0; g < generations; ++g) {
        if (state.schedules_evaluated >= params.schedule_budget) {
            state.budget_exhausted = true;
            return;
        }
        const auto parent_indices = select_parents(state.population, phase, params, state.rng);
        std::vector<Individual> parents;
        parents.reserve(parent_indices.size());
        for (int index : parent_indices)
            parents.push_back(state.population.members[index]);

        state.population = next_generation(state.population, parents, state.current_instance(),
                                           params, state.rng);
        evaluate_population(state);
        offer_generation_best(state);
        note_generation(state);
        reverse_population(state);
    }
    if (state.schedules_evaluated >= params.schedule_budget)
        state.budget_exhausted = true;
}

void inject_candidates(RunState& state, const GaParams& params) {
    if (state.candidates.empty())
        return;
    const int list_best = state.candidates.best().individual.fitness;
    const int pop_best = state.population.members[best_member(state.population)].fitness;
    if (!(pop_best > list_best && state.deterioration_run >= params.deterioration_patience))
        return;

    const int replace = std::min(state.candidates.size(), params.elite_phase1);
    if (replace <= 0)
        return;

    // worst members first; ties resolved toward later population positions
    std::vector<int> by_badness(state.population.size());
    std::iota(by_badness.begin(), by_badness.end(), 0);
    std::stable_sort(by_badness.begin(), by_badness.end(), [&](int a, int b) {
        if (state.population.members[a].fitness != state.population.members[b].fitness)
            return state.population.members[a].fitness > state.population.members[b].fitness;
        return a > b;
    });

    const Direction direction = state.population.direction;
    for (int i = 0; i < replace; ++i) {
        const int slot = by_badness[i];
        const auto& entry = state.candidates.entries()[i];
        if (direction == Direction::forward) {
            state.population.members[slot] = entry.individual;
            state.schedules[slot] = entry.schedule;
        } else {
            ActivityList al = justify_reencode(entry.schedule, state.backward);
            Schedule schedule = ssgs_decode(state.backward, al);
            ++state.schedules_evaluated;
            state.population.members[slot] =
                Individual{std::move(al), schedule.makespan, Direction::reversed, true};
            state.schedules[slot] = std::move(schedule);
        }
    }
    state.deterioration_run = 0;
}

RunResult run_2pga(const ProjectInstance& instance, const GaParams& params) {
    params.validate();

    RunResult result;
    result.instance_id = instance.name;
    result.seed = params.seed;

    if (instance.n_real == 0) {
        // Nothing to evolve: the only chromosome is [0, 1].
        ActivityList al{{0, instance.sink()}};
        Schedule schedule = ssgs_decode(instance, al);
        result.best = Individual{al, schedule.makespan, Direction::forward, true};
        result.best_schedule = schedule;
        result.schedules_evaluated = 1;
        result.generations_run = 0;
        result.fitness_trace = {schedule.makespan};
        return result;
    }

    RunState state = init_run_state(instance, params);
    while (!state.budget_exhausted) {
        phase_iteration(state, 1, params);
        if (state.budget_exhausted)
            break;
        phase_iteration(state, 2, params);
        if (state.budget_exhausted)
            break;
        inject_candidates(state, params);
    }

    const auto& best = state.candidates.best();
    if (!validate_schedule(state.forward, best.schedule).feasible())
        throw std::logic_error("run_2pga: best schedule failed validation (solver bug)");

    result.best = best.individual;
    result.best_schedule = best.schedule;
    result.generations_run = state.generations_run;
    result.schedules_evaluated = state.schedules_evaluated;
    result.fitness_trace = std::move(state.fitness_trace);
    return result;
}

} // namespace rcpsp
