#pragma once

#include <functional>

#include "rcpsp/instance.hpp"

namespace rcpsp {

/// Exhaustive enumeration is only sane on tiny instances; the cap keeps the
/// oracle usable inside property-test loops (8! = 40,320 decodes worst case).
struct TinyInstanceBudget {
    int max_real_activities = 8;
};

/// Yields every precedence-feasible permutation exactly once (depth-first
/// over eligible-set choices). Enumeration stops early if the visitor
/// returns false.
/// Throws std::invalid_argument when the instance exceeds the budget cap.
void enumerate_linear_extensions(const ProjectInstance& instance,
                                 const std::function<bool(const ActivityList&)>& visit,
                                 TinyInstanceBudget budget = {});

/// Number of linear extensions (same traversal as the enumerator).
long long count_linear_extensions(const ProjectInstance& instance, TinyInstanceBudget budget = {});

/// Minimum SSGS makespan over all linear extensions: the ground-truth optimum
/// for active schedules on tiny instances.
int brute_force_best(const ProjectInstance& instance, TinyInstanceBudget budget = {});

} // namespace rcpsp
