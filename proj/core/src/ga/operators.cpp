#include "rcpsp/ga/operators.hpp"

#include <algorithm>
#include <stdexcept>

#include "rcpsp/ssgs.hpp"

namespace rcpsp {

namespace {

// One child of the two-point crossover; the other comes from swapped roles.
ActivityList crossover_child(const ActivityList& mother, const ActivityList& father, int r1,
                             int r2) {
    const int n = static_cast<int>(mother.order.size());
    const int real_count = n - 2;

    ActivityList child;
    child.order.reserve(n);
    std::vector<char> taken(n, 0);

    child.order.push_back(mother.order[0]);
    for (int i = 1; i <= r1; ++i) {
        child.order.push_back(mother.order[i]);
        taken[mother.order[i]] = 1;
    }

    // positions r1+1..r2: father entries in father order, skipping taken ones
    int from_father = 1;
    for (int i = r1 + 1; i <= r2; ++i) {
        while (taken[father.order[from_father]])
            ++from_father;
        child.order.push_back(father.order[from_father]);
        taken[father.order[from_father]] = 1;
    }

    // positions r2+1..N: mother entries past r1 in mother order
    int from_mother = r1 + 1;
    for (int i = r2 + 1; i <= real_count; ++i) {
        while (taken[mother.order[from_mother]])
            ++from_mother;
        child.order.push_back(mother.order[from_mother]);
        taken[mother.order[from_mother]] = 1;
    }

    child.order.push_back(mother.order[n - 1]);
    return child;
}

} // namespace

std::pair<ActivityList, ActivityList> two_point_crossover(const ActivityList& mother,
                                                          const ActivityList& father, int r1,
                                                          int r2) {
    const int n = static_cast<int>(mother.order.size());
    const int real_count = n - 2;
    if (father.order.size() != mother.order.size())
        throw std::invalid_argument("two_point_crossover: parents of different length");
    if (r1 < 1 || r1 > r2 || r2 > real_count)
        throw std::invalid_argument("two_point_crossover: need 0 < r1 <= r2 <= N");

    return {crossover_child(mother, father, r1, r2), crossover_child(father, mother, r1, r2)};
}

ActivityList repair(std::vector<int> order, const ProjectInstance& instance) {
    const int n = instance.total_activities();
    if (static_cast<int>(order.size()) != n || order.front() != 0 || order.back() != instance.sink())
        throw std::invalid_argument("repair: expected a permutation with pinned dummies");

    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        const int j = order[i];
        if (j < 0 || j >= n || position[j] != -1)
            throw std::invalid_argument("repair: not a permutation");
        position[j] = i;
    }

    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i < n - 1;) {
            const int j = order[i];
            int rightmost = -1;
            for (int p : instance.predecessors[j])
                rightmost = std::max(rightmost, position[p]);
            if (rightmost <= i) {
                ++i;
                continue;
            }
            // move j to just after its rightmost predecessor; the segment
            // between shifts one to the left
            order.erase(order.begin() + i);
            order.insert(order.begin() + rightmost, j);
            for (int pos = i; pos <= rightmost; ++pos)
                position[order[pos]] = pos;
            moved = true;
            // re-examine position i (a new activity shifted into it)
        }
    }
    return ActivityList{std::move(order)};
}

ActivityList mutate(const ActivityList& al, const ProjectInstance& instance,
                    const MutationRates& rates, Rng& rng) {
    const int real_count = instance.n_real;
    if (real_count < 2)
        return al;

    std::vector<int> order = al.order;
    bool changed = false;

    if (rng_unit(rng) < rates.single_move) {
        const int from = rng_int(rng, 1, real_count);
        const int to = rng_int(rng, 1, real_count);
        if (from != to) {
            const int j = order[from];
            order.erase(order.begin() + from);
            order.insert(order.begin() + to, j);
            changed = true;
        }
    }

    if (rng_unit(rng) < rates.pair_exchange) {
        const int a = rng_int(rng, 1, real_count);
        const int b = rng_int(rng, 1, real_count);
        if (a != b) {
            std::swap(order[a], order[b]);
            changed = true;
        }
    }

    if (rng_unit(rng) < rates.group_move) {
        const int max_len = std::min(5, real_count);
        const int len = rng_int(rng, 2, max_len);
        const int from = rng_int(rng, 1, real_count - len + 1);
        const int to = rng_int(rng, 1, real_count - len + 1);
        if (from != to) {
            std::vector<int> block(order.begin() + from, order.begin() + from + len);
            order.erase(order.begin() + from, order.begin() + from + len);
            order.insert(order.begin() + to, block.begin(), block.end());
            changed = true;
        }
    }

    if (!changed)
        return al;

    ActivityList mutated{std::move(order)};
    if (!is_precedence_feasible(instance, mutated))
        return repair(std::move(mutated.order), instance);
    return mutated;
}

} // namespace rcpsp
