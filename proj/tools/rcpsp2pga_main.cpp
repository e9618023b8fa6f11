#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "harness/bench.hpp"
#include "rcpsp/errors.hpp"
#include "rcpsp/ga/solver.hpp"
#include "rcpsp/result_io.hpp"
#include "rcpsp/ssgs.hpp"

namespace fs = std::filesystem;
using namespace rcpsp;

namespace {

// exit codes: 0 ok/feasible, 1 infeasible schedule, 2 input error, 3 solver bug
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSolverBug = 3;

struct GaFlags {
    CLI::Option* seed = nullptr;
    CLI::Option* budget = nullptr;
    CLI::Option* population = nullptr;
    CLI::Option* parents = nullptr;
    CLI::Option* elite = nullptr;
    CLI::Option* phase1 = nullptr;
    CLI::Option* phase2 = nullptr;
    CLI::Option* tournament = nullptr;
    CLI::Option* mut_single = nullptr;
    CLI::Option* mut_exchange = nullptr;
    CLI::Option* mut_group = nullptr;

    std::uint64_t seed_value = GaParams{}.seed;
    long long budget_value = GaParams{}.schedule_budget;
    int population_value = GaParams{}.population_size;
    int parents_value = GaParams{}.parent_count;
    int elite_value = GaParams{}.elite_phase1;
    int phase1_value = GaParams{}.phase1_generations;
    int phase2_value = GaParams{}.phase2_generations;
    int tournament_value = GaParams{}.tournament_size;
    double mut_single_value = MutationRates{}.single_move;
    double mut_exchange_value = MutationRates{}.pair_exchange;
    double mut_group_value = MutationRates{}.group_move;

    void add_to(CLI::App& cmd) {
        seed = cmd.add_option("--seed", seed_value, "Random seed");
        budget = cmd.add_option("--budget", budget_value, "Max SSGS schedule evaluations");
        population = cmd.add_option("--population", population_value, "Population size");
        parents = cmd.add_option("--parents", parents_value, "Parents per generation (N_p)");
        elite = cmd.add_option("--elite", elite_value, "Elite set size N_F (both phases)");
        phase1 = cmd.add_option("--phase1-gens", phase1_value, "Generations per phase-1 block");
        phase2 = cmd.add_option("--phase2-gens", phase2_value, "Generations per phase-2 block");
        tournament = cmd.add_option("--tournament", tournament_value, "Tournament size");
        mut_single = cmd.add_option("--mut-single", mut_single_value,
                                    "Single-activity relocation probability");
        mut_exchange =
            cmd.add_option("--mut-exchange", mut_exchange_value, "Pair exchange probability");
        mut_group = cmd.add_option("--mut-group", mut_group_value, "Block move probability");
    }

    // Only flags the user actually passed override the config-file values.
    void apply(GaParams& ga) const {
        if (seed->count())
            ga.seed = seed_value;
        if (budget->count())
            ga.schedule_budget = budget_value;
        if (population->count())
            ga.population_size = population_value;
        if (parents->count())
            ga.parent_count = parents_value;
        if (elite->count())
            ga.elite_phase1 = ga.elite_phase2 = elite_value;
        if (phase1->count())
            ga.phase1_generations = phase1_value;
        if (phase2->count())
            ga.phase2_generations = phase2_value;
        if (tournament->count())
            ga.tournament_size = tournament_value;
        if (mut_single->count())
            ga.mutation.single_move = mut_single_value;
        if (mut_exchange->count())
            ga.mutation.pair_exchange = mut_exchange_value;
        if (mut_group->count())
            ga.mutation.group_move = mut_group_value;
    }
};

int cmd_solve(const std::string& instance_path, const GaFlags& flags) {
    if (!fs::exists(instance_path)) {
        std::cerr << "error: file not found: " << instance_path << "\n";
        return kExitInputError;
    }
    ProjectInstance instance = parse_instance(load_instance_file(instance_path));

    GaParams ga;
    flags.apply(ga);

    RunResult result;
    try {
        result = run_2pga(instance, ga);
    } catch (const std::logic_error& e) {
        std::cerr << "solver bug: " << e.what() << "\n";
        return kExitSolverBug;
    }

    const auto report = validate_schedule(instance, result.best_schedule);
    if (!report.feasible()) {
        std::cerr << "solver bug: best schedule is infeasible:\n";
        for (const auto& violation : report.violations)
            std::cerr << "  " << violation.describe() << "\n";
        return kExitSolverBug;
    }

    std::cout << serialize_result(result) << "\n";
    return 0;
}

int cmd_validate(const std::string& instance_path, const std::string& schedule_path) {
    for (const auto& path : {instance_path, schedule_path})
        if (!fs::exists(path)) {
            std::cerr << "error: file not found: " << path << "\n";
            return kExitInputError;
        }
    ProjectInstance instance = parse_instance(load_instance_file(instance_path));

    std::ifstream in(schedule_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::vector<int> starts = parse_schedule_starts(buffer.str());

    if (static_cast<int>(starts.size()) != instance.total_activities()) {
        std::cerr << "structural error: schedule lists " << starts.size()
                  << " activities but the instance has " << instance.total_activities() << "\n";
        return kExitInputError;
    }

    Schedule schedule;
    schedule.starts = std::move(starts);
    schedule.finishes.resize(schedule.starts.size());
    for (size_t j = 0; j < schedule.starts.size(); ++j)
        schedule.finishes[j] = schedule.starts[j] + instance.durations[j];
    schedule.makespan = *std::max_element(schedule.finishes.begin(), schedule.finishes.end());

    const auto report = validate_schedule(instance, schedule);
    if (report.feasible()) {
        std::cout << "FEASIBLE\n";
        return 0;
    }
    for (const auto& violation : report.violations)
        std::cout << violation.describe() << "\n";
    return kExitInfeasible;
}

int cmd_bench(harness::BenchConfig config) {
    const auto report = harness::run_bench(config);
    if (!config.output_path.empty()) {
        harness::write_report(report, config.output_path);
        std::cerr << "wrote " << config.output_path << ".csv and " << config.output_path
                  << ".json\n";
    }
    std::cout << harness::render_csv(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2PGA solver and benchmark harness for the resource-constrained project "
                 "scheduling problem (PSPLIB .sm instances)"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one instance, print the result as JSON");
    std::string solve_instance;
    solve->add_option("instance", solve_instance, "PSPLIB .sm file")->required();
    GaFlags solve_flags;
    solve_flags.add_to(*solve);

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark batch, report gaps as CSV + JSON");
    std::vector<std::string> bench_instances;
    bench->add_option("instances", bench_instances, ".sm files or directories");
    std::string bench_config_path, bench_best_known, bench_out;
    int bench_reps = 0, bench_workers = 0;
    bench->add_option("--config", bench_config_path, "JSON config file (flags win)");
    auto* best_known_opt =
        bench->add_option("--best-known", bench_best_known, "Two-column best-known table");
    auto* reps_opt = bench->add_option("--reps", bench_reps, "Repetitions per instance");
    auto* workers_opt = bench->add_option("--workers", bench_workers, "Parallel workers");
    auto* out_opt = bench->add_option("--out", bench_out, "Report base path (.csv/.json)");
    GaFlags bench_flags;
    bench_flags.add_to(*bench);

    // validate
    auto* validate = app.add_subcommand("validate", "Check a schedule JSON against an instance");
    std::string validate_instance, validate_schedule_path;
    validate->add_option("instance", validate_instance, "PSPLIB .sm file")->required();
    validate->add_option("schedule", validate_schedule_path,
                         "Schedule JSON ({\"starts\": [...]} or a solve result)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(solve_instance, solve_flags);
        if (validate->parsed())
            return cmd_validate(validate_instance, validate_schedule_path);
        if (bench->parsed()) {
            harness::BenchConfig config;
            if (!bench_config_path.empty())
                config = harness::load_bench_config(bench_config_path);
            if (!bench_instances.empty())
                config.instance_paths = bench_instances;
            if (best_known_opt->count())
                config.best_known_path = bench_best_known;
            if (reps_opt->count())
                config.repetitions = bench_reps;
            if (workers_opt->count())
                config.parallel_workers = bench_workers;
            if (out_opt->count())
                config.output_path = bench_out;
            bench_flags.apply(config.ga);
            return cmd_bench(std::move(config));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InfeasibleInstanceError& e) {
        std::cerr << "infeasible instance: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DuplicateKeyError& e) {
        std::cerr << "duplicate key: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
