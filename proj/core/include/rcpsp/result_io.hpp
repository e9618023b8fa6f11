#pragma once

#include <string>

#include "rcpsp/ga/solver_types.hpp"

namespace rcpsp {

/// RunResult as a JSON object (stable key order, 2-space indent). Total on
/// valid results; round-trips through deserialize_result.
std::string serialize_result(const RunResult& result);

/// Inverse of serialize_result. Throws ParseError on malformed JSON or
/// missing fields.
RunResult deserialize_result(const std::string& text);

/// Reads the "starts" array out of a schedule JSON object, accepting either
/// a bare schedule object or a full RunResult (its "best_schedule"). Finishes
/// and makespan are derived from the instance durations by the caller.
std::vector<int> parse_schedule_starts(const std::string& text);

} // namespace rcpsp
