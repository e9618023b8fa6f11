#include "rcpsp/schedule.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rcpsp {

ResourceProfile build_resource_profile(const ProjectInstance& instance, const Schedule& schedule) {
    ResourceProfile profile;
    const int k = instance.resource_count();
    const int span = std::max(schedule.makespan, 0);
    profile.usage.assign(k, std::vector<int>(span, 0));
    for (int j = 0; j < instance.total_activities(); ++j) {
        for (int t = std::max(schedule.starts[j], 0);
             t < std::min(schedule.finishes[j], span); ++t)
            for (int r = 0; r < k; ++r)
                profile.usage[r][t] += instance.requirements[j][r];
    }
    return profile;
}

std::string Violation::describe() const {
    std::ostringstream out;
    switch (kind) {
    case ViolationKind::precedence:
        if (predecessor < 0)
            out << "precedence: activity " << activity << " starts before time zero";
        else
            out << "precedence: activity " << activity << " starts before predecessor "
                << predecessor << " finishes (edge " << predecessor << " -> " << activity << ")";
        break;
    case ViolationKind::capacity:
        out << "capacity: resource " << resource + 1 << " oversubscribed at time " << time
            << " (demand " << demand << " > capacity " << capacity << ")";
        break;
    case ViolationKind::duration:
        out << "duration: activity " << activity << " has finish != start + duration";
        break;
    }
    return out.str();
}

ValidationReport validate_schedule(const ProjectInstance& instance, const Schedule& schedule) {
    const int n = instance.total_activities();
    if (static_cast<int>(schedule.starts.size()) != n ||
        static_cast<int>(schedule.finishes.size()) != n)
        throw std::invalid_argument("schedule does not cover all activities (expected " +
                                    std::to_string(n) + " entries)");

    ValidationReport report;

    for (int j = 0; j < n; ++j) {
        if (schedule.finishes[j] != schedule.starts[j] + instance.durations[j]) {
            Violation v;
            v.kind = ViolationKind::duration;
            v.activity = j;
            report.violations.push_back(v);
        }
    }

    for (int j = 0; j < n; ++j) {
        if (schedule.starts[j] < 0) {
            Violation v;
            v.kind = ViolationKind::precedence;
            v.activity = j;
            v.predecessor = -1;
            report.violations.push_back(v);
        }
        for (int p : instance.predecessors[j]) {
            if (schedule.starts[j] < schedule.finishes[p]) {
                Violation v;
                v.kind = ViolationKind::precedence;
                v.activity = j;
                v.predecessor = p;
                report.violations.push_back(v);
            }
        }
    }

    // Capacity via an event sweep (no dense time grid): one violation per
    // maximal overloaded interval per resource, reported at its first time.
    for (int r = 0; r < instance.resource_count(); ++r) {
        std::map<int, int> delta;
        for (int j = 0; j < n; ++j) {
            const int req = instance.requirements[j][r];
            if (req <= 0 || schedule.finishes[j] <= schedule.starts[j])
                continue;
            delta[schedule.starts[j]] += req;
            delta[schedule.finishes[j]] -= req;
        }
        int load = 0;
        bool over = false;
        for (const auto& [time, change] : delta) {
            load += change;
            if (load > instance.capacities[r] && !over) {
                Violation v;
                v.kind = ViolationKind::capacity;
                v.resource = r;
                v.time = time;
                v.demand = load;
                v.capacity = instance.capacities[r];
                report.violations.push_back(v);
                over = true;
            } else if (load <= instance.capacities[r]) {
                over = false;
            }
        }
    }

    return report;
}

} // namespace rcpsp
