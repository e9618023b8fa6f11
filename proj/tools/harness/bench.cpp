#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rcpsp/errors.hpp"
#include "rcpsp/ga/solver.hpp"
#include "seeds.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace rcpsp::harness {

void BenchConfig::validate() const {
    ga.validate();
    if (instance_paths.empty())
        throw std::invalid_argument("bench: no instances given");
    if (repetitions < 1)
        throw std::invalid_argument("bench: repetitions must be at least 1");
    if (parallel_workers < 1)
        throw std::invalid_argument("bench: parallel_workers must be at least 1");
}

namespace {

void apply_ga_json(const json& in, GaParams& ga) {
    for (const auto& [key, value] : in.items()) {
        if (key == "seed")
            ga.seed = value.get<std::uint64_t>();
        else if (key == "budget")
            ga.schedule_budget = value.get<long long>();
        else if (key == "population")
            ga.population_size = value.get<int>();
        else if (key == "parents")
            ga.parent_count = value.get<int>();
        else if (key == "elite")
            ga.elite_phase1 = ga.elite_phase2 = value.get<int>();
        else if (key == "elite_phase1")
            ga.elite_phase1 = value.get<int>();
        else if (key == "elite_phase2")
            ga.elite_phase2 = value.get<int>();
        else if (key == "phase1_gens")
            ga.phase1_generations = value.get<int>();
        else if (key == "phase2_gens")
            ga.phase2_generations = value.get<int>();
        else if (key == "tournament")
            ga.tournament_size = value.get<int>();
        else if (key == "candidate_capacity")
            ga.candidate_list_capacity = value.get<int>();
        else if (key == "patience")
            ga.deterioration_patience = value.get<int>();
        else if (key == "mutation") {
            for (const auto& [mkey, mvalue] : value.items()) {
                if (mkey == "single")
                    ga.mutation.single_move = mvalue.get<double>();
                else if (mkey == "exchange")
                    ga.mutation.pair_exchange = mvalue.get<double>();
                else if (mkey == "group")
                    ga.mutation.group_move = mvalue.get<double>();
                else
                    throw ParseError("bench config: unknown mutation key \"" + mkey + "\"");
            }
        } else {
            throw ParseError("bench config: unknown ga key \"" + key + "\"");
        }
    }
}

} // namespace

BenchConfig load_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open config " + path);
    json root;
    try {
        root = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid config JSON: ") + e.what());
    }

    BenchConfig config;
    try {
        for (const auto& [key, value] : root.items()) {
            if (key == "instances")
                config.instance_paths = value.get<std::vector<std::string>>();
            else if (key == "best_known")
                config.best_known_path = value.get<std::string>();
            else if (key == "repetitions")
                config.repetitions = value.get<int>();
            else if (key == "workers")
                config.parallel_workers = value.get<int>();
            else if (key == "out")
                config.output_path = value.get<std::string>();
            else if (key == "ga")
                apply_ga_json(value, config.ga);
            else
                throw ParseError("bench config: unknown key \"" + key + "\"");
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bench config: mistyped value: ") + e.what());
    }
    return config;
}

namespace {

std::vector<std::string> expand_paths(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const auto& path : paths) {
        if (fs::is_directory(path)) {
            std::vector<std::string> here;
            for (const auto& entry : fs::directory_iterator(path))
                if (entry.is_regular_file() && entry.path().extension() == ".sm")
                    here.push_back(entry.path().string());
            std::sort(here.begin(), here.end());
            files.insert(files.end(), here.begin(), here.end());
        } else {
            files.push_back(path);
        }
    }
    return files;
}

struct RunOutcome {
    int makespan = 0;
    long long schedules_evaluated = 0;
    double seconds = 0.0;
};

} // namespace

GapReport run_bench(const BenchConfig& config) {
    config.validate();

    const auto files = expand_paths(config.instance_paths);
    if (files.empty())
        throw std::invalid_argument("bench: no .sm files found");

    // all-or-nothing: every instance must parse before any run starts
    std::vector<ProjectInstance> instances;
    instances.reserve(files.size());
    for (const auto& file : files)
        instances.push_back(parse_instance(load_instance_file(file)));

    BestKnownTable best_known;
    const bool have_best_known = !config.best_known_path.empty();
    if (have_best_known) {
        std::ifstream in(config.best_known_path);
        if (!in)
            throw ParseError("cannot open best-known table " + config.best_known_path);
        best_known = parse_best_known(in);
    }

    const int reps = config.repetitions;
    const int total_runs = static_cast<int>(instances.size()) * reps;
    std::vector<RunOutcome> outcomes(total_runs);

    std::atomic<int> next_task{0};
    std::atomic<bool> failed{false};
    std::string failure_message;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const int task = next_task.fetch_add(1);
            if (task >= total_runs || failed.load())
                return;
            const int instance_index = task / reps;
            const int rep = task % reps;
            try {
                GaParams ga = config.ga;
                ga.seed = derive_run_seed(config.ga.seed, rep, instances[instance_index].name);
                const auto t0 = std::chrono::steady_clock::now();
                RunResult result = run_2pga(instances[instance_index], ga);
                const auto t1 = std::chrono::steady_clock::now();
                outcomes[task] = {result.best.fitness, result.schedules_evaluated,
                                  std::chrono::duration<double>(t1 - t0).count()};
            } catch (const std::exception& e) {
                std::scoped_lock lock(failure_mutex);
                failure_message = e.what();
                failed.store(true);
                return;
            }
        }
    };

    const int worker_count = std::min(config.parallel_workers, total_runs);
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (int w = 0; w < worker_count; ++w)
        pool.emplace_back(worker);
    for (auto& thread : pool)
        thread.join();
    if (failed.load())
        throw std::runtime_error("bench run failed: " + failure_message);

    GapReport report;
    report.rows.reserve(instances.size());
    for (size_t i = 0; i < instances.size(); ++i) {
        GapRow row;
        row.instance_id = instances[i].name;
        row.achieved = outcomes[i * reps].makespan;
        for (int rep = 0; rep < reps; ++rep) {
            const auto& outcome = outcomes[i * reps + rep];
            row.achieved = std::min(row.achieved, outcome.makespan);
            row.schedules_evaluated += outcome.schedules_evaluated;
            row.wall_time_s += outcome.seconds;
        }
        if (have_best_known) {
            if (auto id = parse_psplib_stem(instances[i].name)) {
                if (auto hit = best_known.entries.find(id->flat());
                    hit != best_known.entries.end())
                    row.best_known = hit->second;
            }
        }
        if (row.best_known) {
            row.gap = (row.achieved - *row.best_known) / static_cast<double>(*row.best_known);
            row.improved = row.achieved < *row.best_known;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

std::string format_gap(double gap) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", gap);
    return buffer;
}

} // namespace

std::string render_csv(const GapReport& report) {
    std::ostringstream out;
    out << "instance,best_known,achieved,gap,improved,schedules_evaluated,wall_time_s\n";
    for (const auto& row : report.rows) {
        out << row.instance_id << ',';
        if (row.best_known)
            out << *row.best_known;
        out << ',' << row.achieved << ',';
        if (row.gap)
            out << format_gap(*row.gap);
        out << ',';
        if (row.best_known)
            out << (row.improved ? "true" : "false");
        out << ',' << row.schedules_evaluated << ',' << format_gap(row.wall_time_s) << '\n';
    }
    return out.str();
}

std::string render_json(const GapReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r;
        r["instance"] = row.instance_id;
        r["best_known"] = row.best_known ? json(*row.best_known) : json(nullptr);
        r["achieved"] = row.achieved;
        // match the CSV text exactly: fixed 6-decimal rendering
        r["gap"] = row.gap ? json(std::stod(format_gap(*row.gap))) : json(nullptr);
        r["improved"] = row.best_known ? json(row.improved) : json(nullptr);
        r["schedules_evaluated"] = row.schedules_evaluated;
        r["wall_time_s"] = std::stod(format_gap(row.wall_time_s));
        rows.push_back(std::move(r));
    }
    json out;
    out["rows"] = std::move(rows);
    return out.dump(2);
}

void write_report(const GapReport& report, const std::string& base_path) {
    {
        std::ofstream csv(base_path + ".csv");
        if (!csv)
            throw std::runtime_error("cannot write " + base_path + ".csv");
        csv << render_csv(report);
    }
    {
        std::ofstream js(base_path + ".json");
        if (!js)
            throw std::runtime_error("cannot write " + base_path + ".json");
        js << render_json(report) << '\n';
    }
}

} // namespace rcpsp::harness
