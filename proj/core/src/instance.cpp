#include "rcpsp/instance.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "rcpsp/errors.hpp"

namespace rcpsp {

int ProjectInstance::horizon() const {
    return std::accumulate(durations.begin(), durations.end(), 0);
}

namespace {

std::string activity_label(const std::string& name, int j) {
    return (name.empty() ? std::string("activity ") : name + ": activity ") + std::to_string(j);
}

void check_acyclic(const ProjectInstance& inst) {
    const int n = inst.total_activities();
    std::vector<int> indegree(n, 0);
    for (int j = 0; j < n; ++j)
        indegree[j] = static_cast<int>(inst.predecessors[j].size());

    std::queue<int> ready;
    for (int j = 0; j < n; ++j)
        if (indegree[j] == 0)
            ready.push(j);

    int emitted = 0;
    while (!ready.empty()) {
        const int j = ready.front();
        ready.pop();
        ++emitted;
        for (int s : inst.successors[j])
            if (--indegree[s] == 0)
                ready.push(s);
    }
    if (emitted != n)
        throw StructuralError(inst.name.empty() ? "precedence relation contains a cycle"
                                                : inst.name + ": precedence relation contains a cycle");
}

} // namespace

ProjectInstance make_instance(std::string name, int n_real, std::vector<int> durations,
                              std::vector<std::vector<int>> predecessors,
                              std::vector<int> capacities,
                              std::vector<std::vector<int>> requirements, Direction direction) {
    ProjectInstance inst;
    inst.name = std::move(name);
    inst.n_real = n_real;
    inst.durations = std::move(durations);
    inst.predecessors = std::move(predecessors);
    inst.capacities = std::move(capacities);
    inst.requirements = std::move(requirements);
    inst.direction = direction;

    if (n_real < 0)
        throw StructuralError("negative activity count");
    const int n = inst.total_activities();
    const int sink = inst.sink();
    const int k = inst.resource_count();

    if (static_cast<int>(inst.durations.size()) != n)
        throw StructuralError(inst.name + ": durations cover " +
                              std::to_string(inst.durations.size()) + " activities, expected " +
                              std::to_string(n));
    if (static_cast<int>(inst.predecessors.size()) != n)
        throw StructuralError(inst.name + ": predecessor sets cover " +
                              std::to_string(inst.predecessors.size()) + " activities, expected " +
                              std::to_string(n));
    if (static_cast<int>(inst.requirements.size()) != n)
        throw StructuralError(inst.name + ": requirement rows cover " +
                              std::to_string(inst.requirements.size()) + " activities, expected " +
                              std::to_string(n));

    if (inst.durations[0] != 0 || inst.durations[sink] != 0)
        throw StructuralError(activity_label(inst.name, 0) + "/" + std::to_string(sink) +
                              ": dummy activities must have zero duration");
    for (int j = 0; j < n; ++j)
        if (inst.durations[j] < 0)
            throw StructuralError(activity_label(inst.name, j) + ": negative duration");

    for (int c : inst.capacities)
        if (c < 0)
            throw StructuralError(inst.name + ": negative resource capacity");

    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(inst.requirements[j].size()) != k)
            throw StructuralError(activity_label(inst.name, j) + ": requirement row has " +
                                  std::to_string(inst.requirements[j].size()) +
                                  " entries, expected " + std::to_string(k));
        for (int r = 0; r < k; ++r) {
            if (inst.requirements[j][r] < 0)
                throw StructuralError(activity_label(inst.name, j) + ": negative requirement");
            if (inst.requirements[j][r] > inst.capacities[r])
                throw InfeasibleInstanceError(
                    activity_label(inst.name, j) + " requests " +
                    std::to_string(inst.requirements[j][r]) + " of resource " +
                    std::to_string(r + 1) + " but its capacity is " +
                    std::to_string(inst.capacities[r]) + "; no schedule can exist");
        }
    }
    if ((inst.requirements[0] != std::vector<int>(k, 0)) ||
        (inst.requirements[sink] != std::vector<int>(k, 0)))
        throw StructuralError(inst.name + ": dummy activities must have zero requirements");

    if (!inst.predecessors[0].empty())
        throw StructuralError(activity_label(inst.name, 0) + ": dummy source has predecessors");
    for (int j = 1; j < n; ++j) {
        auto& preds = inst.predecessors[j];
        std::sort(preds.begin(), preds.end());
        if (preds.empty())
            throw StructuralError(activity_label(inst.name, j) +
                                  ": empty predecessor set (must at least list the dummy source)");
        if (std::adjacent_find(preds.begin(), preds.end()) != preds.end())
            throw StructuralError(activity_label(inst.name, j) + ": duplicate predecessor");
        for (int p : preds) {
            if (p < 0 || p >= n)
                throw StructuralError(activity_label(inst.name, j) + ": predecessor " +
                                      std::to_string(p) + " out of range");
            if (p == j)
                throw StructuralError(activity_label(inst.name, j) + ": self-precedence");
            if (p == sink)
                throw StructuralError(activity_label(inst.name, j) +
                                      ": the dummy sink cannot precede anything");
        }
    }

    inst.successors.assign(n, {});
    for (int j = 0; j < n; ++j)
        for (int p : inst.predecessors[j])
            inst.successors[p].push_back(j);
    for (auto& succ : inst.successors)
        std::sort(succ.begin(), succ.end());

    for (int j = 0; j < sink; ++j)
        if (inst.successors[j].empty())
            throw StructuralError(activity_label(inst.name, j) +
                                  ": no successors; the dummy sink is unreachable from it");

    check_acyclic(inst);
    return inst;
}

} // namespace rcpsp
