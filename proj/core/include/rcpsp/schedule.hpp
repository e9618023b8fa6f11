#pragma once

#include <string>
#include <vector>

#include "rcpsp/instance.hpp"

namespace rcpsp {

/// Start/finish times for every activity; makespan is the sink's finish.
struct Schedule {
    std::vector<int> starts;
    std::vector<int> finishes;
    int makespan = 0;

    bool operator==(const Schedule&) const = default;
};

/// Per-resource usage over time, usage[k][t] = total demand of activities in
/// process at t. Length of each series equals the schedule makespan.
struct ResourceProfile {
    std::vector<std::vector<int>> usage;
};

ResourceProfile build_resource_profile(const ProjectInstance& instance, const Schedule& schedule);

enum class ViolationKind { precedence, capacity, duration };

struct Violation {
    ViolationKind kind;
    int activity = -1;     // the offending activity (precedence/duration)
    int predecessor = -1;  // precedence: the edge tail; -1 means "time origin"
    int resource = -1;     // capacity
    int time = -1;         // capacity: first overloaded time point
    int demand = 0;
    int capacity = 0;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool feasible() const { return violations.empty(); }
};

/// Checks a schedule against the full constraint system: f_j = s_j + t_j,
/// s_j >= max finish of P_j, and per-resource capacity at every time point.
///
/// Deliberately independent of the SSGS decoder (event-sweep instead of the
/// decoder's remaining-capacity array) so it can serve as its oracle.
/// Violations are data, not errors; an empty report means feasible.
/// Throws std::invalid_argument if the schedule does not cover all activities.
ValidationReport validate_schedule(const ProjectInstance& instance, const Schedule& schedule);

} // namespace rcpsp
