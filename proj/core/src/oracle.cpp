#include "rcpsp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rcpsp/ssgs.hpp"

namespace rcpsp {

namespace {

void check_budget(const ProjectInstance& instance, TinyInstanceBudget budget) {
    if (instance.n_real > budget.max_real_activities)
        throw std::invalid_argument("instance has " + std::to_string(instance.n_real) +
                                    " real activities; exhaustive enumeration is capped at " +
                                    std::to_string(budget.max_real_activities));
}

// Depth-first over eligible-set choices: the initial-population recursion
// made exhaustive. Returns false once the visitor asks to stop.
bool extend(const ProjectInstance& instance, std::vector<int>& order, std::vector<int>& missing,
            std::vector<int>& eligible, const std::function<bool(const ActivityList&)>& visit) {
    if (eligible.empty()) {
        order.push_back(instance.sink());
        ActivityList al{order};
        const bool keep_going = visit(al);
        order.pop_back();
        return keep_going;
    }
    // iterate over a snapshot; eligible mutates during recursion
    const std::vector<int> choices = eligible;
    for (const int j : choices) {
        eligible.erase(std::find(eligible.begin(), eligible.end(), j));
        order.push_back(j);
        std::vector<int> awakened;
        for (int s : instance.successors[j])
            if (--missing[s] == 0 && s != instance.sink()) {
                eligible.push_back(s);
                awakened.push_back(s);
            }

        const bool keep_going = extend(instance, order, missing, eligible, visit);

        for (int s : instance.successors[j])
            ++missing[s];
        for (int s : awakened)
            eligible.erase(std::find(eligible.begin(), eligible.end(), s));
        order.pop_back();
        eligible.push_back(j);
        if (!keep_going)
            return false;
    }
    return true;
}

} // namespace

void enumerate_linear_extensions(const ProjectInstance& instance,
                                 const std::function<bool(const ActivityList&)>& visit,
                                 TinyInstanceBudget budget) {
    check_budget(instance, budget);

    const int n = instance.total_activities();
    std::vector<int> missing(n);
    for (int j = 0; j < n; ++j)
        missing[j] = static_cast<int>(instance.predecessors[j].size());

    std::vector<int> order{0};
    std::vector<int> eligible;
    for (int s : instance.successors[0])
        if (--missing[s] == 0 && s != instance.sink())
            eligible.push_back(s);

    extend(instance, order, missing, eligible, visit);
}

long long count_linear_extensions(const ProjectInstance& instance, TinyInstanceBudget budget) {
    long long count = 0;
    enumerate_linear_extensions(
        instance,
        [&](const ActivityList&) {
            ++count;
            return true;
        },
        budget);
    return count;
}

int brute_force_best(const ProjectInstance& instance, TinyInstanceBudget budget) {
    int best = std::numeric_limits<int>::max();
    enumerate_linear_extensions(
        instance,
        [&](const ActivityList& al) {
            best = std::min(best, ssgs_decode(instance, al).makespan);
            return true;
        },
        budget);
    return best;
}

} // namespace rcpsp
