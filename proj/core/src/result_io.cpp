#include "rcpsp/result_io.hpp"

#include <json.hpp>

#include "rcpsp/errors.hpp"

namespace rcpsp {

using nlohmann::json;

std::string serialize_result(const RunResult& result) {
    json out;
    out["instance"] = result.instance_id;
    out["seed"] = result.seed;
    out["makespan"] = result.best.fitness;
    out["activity_list"] = result.best.chromosome.order;
    out["best_schedule"] = {{"starts", result.best_schedule.starts},
                            {"finishes", result.best_schedule.finishes},
                            {"makespan", result.best_schedule.makespan}};
    out["generations"] = result.generations_run;
    out["schedules_evaluated"] = result.schedules_evaluated;
    out["fitness_trace"] = result.fitness_trace;
    return out.dump(2);
}

RunResult deserialize_result(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid result JSON: ") + e.what());
    }
    try {
        RunResult result;
        result.instance_id = in.at("instance").get<std::string>();
        result.seed = in.at("seed").get<std::uint64_t>();
        result.best.fitness = in.at("makespan").get<int>();
        result.best.chromosome.order = in.at("activity_list").get<std::vector<int>>();
        result.best.direction = Direction::forward;
        result.best.evaluated = true;
        const auto& schedule = in.at("best_schedule");
        result.best_schedule.starts = schedule.at("starts").get<std::vector<int>>();
        result.best_schedule.finishes = schedule.at("finishes").get<std::vector<int>>();
        result.best_schedule.makespan = schedule.at("makespan").get<int>();
        result.generations_run = in.at("generations").get<long long>();
        result.schedules_evaluated = in.at("schedules_evaluated").get<long long>();
        result.fitness_trace = in.at("fitness_trace").get<std::vector<int>>();
        return result;
    } catch (const json::exception& e) {
        throw ParseError(std::string("result JSON missing or mistyped field: ") + e.what());
    }
}

std::vector<int> parse_schedule_starts(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid schedule JSON: ") + e.what());
    }
    try {
        if (in.contains("best_schedule"))
            return in.at("best_schedule").at("starts").get<std::vector<int>>();
        return in.at("starts").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("schedule JSON missing \"starts\": ") + e.what());
    }
}

} // namespace rcpsp
