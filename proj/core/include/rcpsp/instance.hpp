#pragma once

#include <string>
#include <vector>

namespace rcpsp {

/// Precedence orientation of an instance or chromosome. Backward scheduling
/// runs on the reversed instance; see reverse_precedence().
enum class Direction { forward, reversed };

inline Direction opposite(Direction d) {
    return d == Direction::forward ? Direction::reversed : Direction::forward;
}

/// An RCPSP instance. Activities are indexed 0..n_real+1 where 0 and
/// n_real+1 are the dummy source/sink (zero duration, zero requirements).
///
/// Build instances through make_instance(), which validates every structural
/// invariant (acyclic precedence, unique source/sink, requirement <= capacity)
/// and derives the successor lists. Instances are immutable afterwards and
/// safe to share across threads.
struct ProjectInstance {
    std::string name;
    int n_real = 0;
    std::vector<int> durations;                  // size n_real+2
    std::vector<std::vector<int>> predecessors;  // immediate, ascending
    std::vector<std::vector<int>> successors;    // derived transpose, ascending
    std::vector<int> capacities;                 // one per renewable resource
    std::vector<std::vector<int>> requirements;  // [activity][resource]
    Direction direction = Direction::forward;

    int total_activities() const { return n_real + 2; }
    int sink() const { return n_real + 1; }
    int resource_count() const { return static_cast<int>(capacities.size()); }

    /// Sum of all durations: an upper bound on any SSGS makespan.
    int horizon() const;
};

/// Validates and finishes a ProjectInstance.
/// Throws StructuralError for broken shape/precedence invariants and
/// InfeasibleInstanceError when some r_{j,k} exceeds RC_k.
ProjectInstance make_instance(std::string name, int n_real, std::vector<int> durations,
                              std::vector<std::vector<int>> predecessors,
                              std::vector<int> capacities,
                              std::vector<std::vector<int>> requirements,
                              Direction direction = Direction::forward);

/// A precedence-feasible permutation of 0..n_real+1 with the dummies pinned
/// to the endpoints: the GA chromosome ("activity list").
struct ActivityList {
    std::vector<int> order;

    bool operator==(const ActivityList&) const = default;
};

} // namespace rcpsp
