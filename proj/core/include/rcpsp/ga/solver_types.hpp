#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcpsp/instance.hpp"
#include "rcpsp/schedule.hpp"

namespace rcpsp {

/// A chromosome with its decoded fitness (makespan, lower is better).
/// `evaluated` is true only while fitness is the makespan of the chromosome's
/// own decode in `direction`; direction conversion keeps the fitness value
/// (the mirrored schedule's makespan, an upper bound) but clears the flag.
struct Individual {
    ActivityList chromosome;
    int fitness = -1;
    Direction direction = Direction::forward;
    bool evaluated = false;
};

/// The evolving pool. All members share one direction.
struct Population {
    std::vector<Individual> members;
    Direction direction = Direction::forward;

    int size() const { return static_cast<int>(members.size()); }
};

/// Bounded best-so-far archive of forward-direction individuals, sorted
/// ascending by fitness, deduplicated by chromosome. entries[0] is the run's
/// answer; entries also re-seed the population when its fitness deteriorates.
class CandidateList {
  public:
    struct Entry {
        Individual individual;  // forward direction, evaluated
        Schedule schedule;      // the matching forward decode
    };

    explicit CandidateList(int capacity = 10) : capacity_(capacity) {}

    /// Inserts in fitness order unless an identical chromosome is already
    /// stored; trims to capacity. Returns true if the entry was kept.
    bool offer(Individual individual, Schedule schedule);

    bool empty() const { return entries_.empty(); }
    int size() const { return static_cast<int>(entries_.size()); }
    int capacity() const { return capacity_; }
    const Entry& best() const { return entries_.front(); }
    const std::vector<Entry>& entries() const { return entries_; }

  private:
    int capacity_;
    std::vector<Entry> entries_;
};

/// Outcome of one solver run. `best` is forward-oriented and its schedule
/// validates cleanly; the trace holds the candidate-list best after the
/// initial population and after each generation.
struct RunResult {
    std::string instance_id;
    std::uint64_t seed = 0;
    Individual best;
    Schedule best_schedule;
    long long generations_run = 0;
    long long schedules_evaluated = 0;
    std::vector<int> fitness_trace;
};

} // namespace rcpsp
