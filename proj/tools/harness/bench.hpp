#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcpsp/ga/params.hpp"
#include "rcpsp/psplib.hpp"

namespace rcpsp::harness {

/// One benchmark batch: instances x repetitions, fanned out over a worker
/// pool, reported as CSV + JSON.
struct BenchConfig {
    std::vector<std::string> instance_paths;  // .sm files or directories of them
    std::string best_known_path;              // optional two-column table
    GaParams ga;
    int repetitions = 1;
    int parallel_workers = 1;
    std::string output_path;  // base name; ".csv"/".json" are appended

    void validate() const;  // throws std::invalid_argument
};

/// Reads a JSON config file (documented in the README). Unknown keys are
/// rejected; absent keys keep their defaults. Throws ParseError.
BenchConfig load_bench_config(const std::string& path);

struct GapRow {
    std::string instance_id;
    std::optional<int> best_known;
    int achieved = 0;
    std::optional<double> gap;  // (achieved - best_known) / best_known
    bool improved = false;      // gap < 0: beat the best-known value
    long long schedules_evaluated = 0;
    double wall_time_s = 0.0;
};

struct GapReport {
    std::vector<GapRow> rows;
};

/// Expands directories, parses every instance up front (all-or-nothing),
/// runs repetitions x instances with seeds derived per run, aggregates the
/// best makespan per instance and joins the best-known table when present.
GapReport run_bench(const BenchConfig& config);

std::string render_csv(const GapReport& report);
std::string render_json(const GapReport& report);

/// Writes <base>.csv and <base>.json.
void write_report(const GapReport& report, const std::string& base_path);

} // namespace rcpsp::harness
