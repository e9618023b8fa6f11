#include "rcpsp/ssgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcpsp {

bool is_precedence_feasible(const ProjectInstance& instance, const ActivityList& al) {
    const int n = instance.total_activities();
    if (static_cast<int>(al.order.size()) != n)
        throw std::invalid_argument("activity list has " + std::to_string(al.order.size()) +
                                    " entries, expected " + std::to_string(n));

    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        const int j = al.order[i];
        if (j < 0 || j >= n || position[j] != -1)
            throw std::invalid_argument("activity list is not a permutation of 0.." +
                                        std::to_string(n - 1));
        position[j] = i;
    }

    // A total order violating the partial order always inverts some
    // immediate edge, so checking immediate predecessors suffices.
    for (int j = 0; j < n; ++j)
        for (int p : instance.predecessors[j])
            if (position[p] > position[j])
                return false;
    return true;
}

Schedule ssgs_decode(const ProjectInstance& instance, const ActivityList& al) {
    if (!is_precedence_feasible(instance, al))
        throw std::invalid_argument("ssgs_decode: precedence-infeasible activity list");

    const int n = instance.total_activities();
    const int k = instance.resource_count();
    const int horizon = instance.horizon() + 1;

    // remaining[r][t]: free capacity of resource r during [t, t+1)
    std::vector<std::vector<int>> remaining(k, std::vector<int>(horizon));
    for (int r = 0; r < k; ++r)
        std::fill(remaining[r].begin(), remaining[r].end(), instance.capacities[r]);

    Schedule sched;
    sched.starts.assign(n, 0);
    sched.finishes.assign(n, 0);

    std::vector<int> finish_events;  // sorted, unique finish times of placed activities

    for (const int j : al.order) {
        int est = 0;
        for (int p : instance.predecessors[j])
            est = std::max(est, sched.finishes[p]);

        const int duration = instance.durations[j];
        int start = est;
        if (duration > 0) {
            // Earliest feasible start is est or a finish event past est; on a
            // capacity clash at time tau no start in [start, tau] can work,
            // so jump to the first finish event after tau.
            for (;;) {
                int clash = -1;
                for (int t = start; t < start + duration && clash < 0; ++t)
                    for (int r = 0; r < k; ++r)
                        if (remaining[r][t] < instance.requirements[j][r]) {
                            clash = t;
                            break;
                        }
                if (clash < 0)
                    break;
                auto next = std::upper_bound(finish_events.begin(), finish_events.end(), clash);
                if (next == finish_events.end())
                    throw std::logic_error("ssgs_decode: no capacity within the horizon");
                start = *next;
            }
            for (int t = start; t < start + duration; ++t)
                for (int r = 0; r < k; ++r)
                    remaining[r][t] -= instance.requirements[j][r];
        }

        sched.starts[j] = start;
        sched.finishes[j] = start + duration;
        auto pos = std::lower_bound(finish_events.begin(), finish_events.end(), sched.finishes[j]);
        if (pos == finish_events.end() || *pos != sched.finishes[j])
            finish_events.insert(pos, sched.finishes[j]);
    }

    sched.makespan = sched.finishes[instance.sink()];
    return sched;
}

ActivityList random_activity_list(const ProjectInstance& instance, Rng& rng) {
    const int n = instance.total_activities();
    const int sink = instance.sink();

    std::vector<int> missing(n);
    for (int j = 0; j < n; ++j)
        missing[j] = static_cast<int>(instance.predecessors[j].size());

    ActivityList al;
    al.order.reserve(n);
    al.order.push_back(0);

    std::vector<int> eligible;
    for (int s : instance.successors[0])
        if (--missing[s] == 0 && s != sink)
            eligible.push_back(s);

    while (!eligible.empty()) {
        const auto pick = rng_below(rng, eligible.size());
        const int j = eligible[pick];
        eligible[pick] = eligible.back();
        eligible.pop_back();
        al.order.push_back(j);
        for (int s : instance.successors[j])
            if (--missing[s] == 0 && s != sink)
                eligible.push_back(s);
    }

    al.order.push_back(sink);
    return al;
}

namespace {

// Reversal keeps real labels and swaps the dummy labels.
int swap_dummies(int j, int n_real) {
    if (j == 0)
        return n_real + 1;
    if (j == n_real + 1)
        return 0;
    return j;
}

} // namespace

ProjectInstance reverse_precedence(const ProjectInstance& instance) {
    const int n = instance.total_activities();
    const int n_real = instance.n_real;

    std::vector<int> durations(n), capacities = instance.capacities;
    std::vector<std::vector<int>> requirements(n), predecessors(n);
    for (int j = 0; j < n; ++j) {
        const int old = swap_dummies(j, n_real);
        durations[j] = instance.durations[old];
        requirements[j] = instance.requirements[old];
    }
    // forward edge (p, j) becomes reversed edge (swap(j), swap(p))
    for (int j = 0; j < n; ++j)
        for (int p : instance.predecessors[j])
            predecessors[swap_dummies(p, n_real)].push_back(swap_dummies(j, n_real));

    return make_instance(instance.name, n_real, std::move(durations), std::move(predecessors),
                         std::move(capacities), std::move(requirements),
                         opposite(instance.direction));
}

Schedule mirror_schedule(const Schedule& schedule, const ProjectInstance& decoded_on) {
    const int n = decoded_on.total_activities();
    const int n_real = decoded_on.n_real;
    const int span = schedule.makespan;

    Schedule mirrored;
    mirrored.starts.assign(n, 0);
    mirrored.finishes.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        const int source = swap_dummies(j, n_real);
        mirrored.starts[j] = span - schedule.finishes[source];
        mirrored.finishes[j] = span - schedule.starts[source];
    }
    mirrored.makespan = span;
    return mirrored;
}

int critical_path_lower_bound(const ProjectInstance& instance) {
    const int n = instance.total_activities();
    // Activities admit a topological order; longest path by DP over it.
    std::vector<int> missing(n), longest(n, 0);
    for (int j = 0; j < n; ++j)
        missing[j] = static_cast<int>(instance.predecessors[j].size());

    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int j = stack.back();
        stack.pop_back();
        const int reach = longest[j] + instance.durations[j];
        for (int s : instance.successors[j]) {
            longest[s] = std::max(longest[s], reach);
            if (--missing[s] == 0)
                stack.push_back(s);
        }
    }
    return longest[instance.sink()];
}

} // namespace rcpsp
