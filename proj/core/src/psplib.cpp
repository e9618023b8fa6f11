#include "rcpsp/psplib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "rcpsp/errors.hpp"

namespace rcpsp {

namespace {

struct Line {
    std::string text;
    int number;  // 1-based
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back({line, ++number});
    }
    return lines;
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<long long> integers_on_line(const std::string& s) {
    std::vector<long long> values;
    std::istringstream in(s);
    std::string token;
    while (in >> token) {
        try {
            size_t used = 0;
            long long v = std::stoll(token, &used);
            if (used == token.size())
                values.push_back(v);
        } catch (const std::exception&) {
            // non-numeric token; skip
        }
    }
    return values;
}

int find_section(const std::vector<Line>& lines, const std::string& header) {
    for (size_t i = 0; i < lines.size(); ++i)
        if (lines[i].text.find(header) != std::string::npos)
            return static_cast<int>(i);
    throw ParseError("missing section header \"" + header + "\"");
}

// Data rows of a section: everything after the header line until the next
// separator, skipping the column-caption line(s) and blanks.
std::vector<Line> section_rows(const std::vector<Line>& lines, int header_index) {
    std::vector<Line> rows;
    for (size_t i = header_index + 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.text.find("****") != std::string::npos)
            break;
        if (is_blank(line.text) || line.text.find("----") != std::string::npos)
            continue;
        if (line.text.find("jobnr.") != std::string::npos ||
            line.text.find("pronr.") != std::string::npos)
            continue;
        rows.push_back(line);
    }
    return rows;
}

} // namespace

RawInstanceFile load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();

    std::string stem = path;
    if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
        stem.erase(0, slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
        stem.erase(dot);
    return {buffer.str(), stem};
}

ProjectInstance parse_instance(const RawInstanceFile& raw) {
    const auto lines = split_lines(raw.text);

    int declared_jobs = -1;
    int declared_resources = -1;
    for (const auto& line : lines) {
        if (line.text.find("jobs (incl.") != std::string::npos) {
            auto values = integers_on_line(line.text);
            if (values.empty())
                throw ParseError("job count line carries no integer", line.number);
            declared_jobs = static_cast<int>(values.back());
        } else if (line.text.find("- renewable") != std::string::npos) {
            auto values = integers_on_line(line.text);
            if (!values.empty())
                declared_resources = static_cast<int>(values.front());
        }
    }
    if (declared_jobs < 0)
        throw ParseError("missing \"jobs (incl. supersource/sink )\" line");
    if (declared_jobs < 2)
        throw StructuralError(raw.name + ": fewer than the two dummy jobs declared");

    const int precedence_at = find_section(lines, "PRECEDENCE RELATIONS");
    const int requests_at = find_section(lines, "REQUESTS/DURATIONS");
    const int avail_at = find_section(lines, "RESOURCEAVAILABILITIES");

    const int jobs = declared_jobs;
    const int n_real = jobs - 2;

    // PRECEDENCE RELATIONS: jobnr  #modes  #successors  successors...
    std::vector<std::vector<int>> successors(jobs);
    {
        auto rows = section_rows(lines, precedence_at);
        if (static_cast<int>(rows.size()) != jobs)
            throw StructuralError(raw.name + ": PRECEDENCE RELATIONS lists " +
                                  std::to_string(rows.size()) + " jobs but the file declares " +
                                  std::to_string(jobs));
        for (const auto& row : rows) {
            auto values = integers_on_line(row.text);
            if (values.size() < 3)
                throw ParseError("PRECEDENCE RELATIONS row needs jobnr/#modes/#successors",
                                 row.number);
            const int job = static_cast<int>(values[0]);
            const int count = static_cast<int>(values[2]);
            if (job < 1 || job > jobs)
                throw StructuralError(raw.name + ": job number " + std::to_string(job) +
                                      " out of range in PRECEDENCE RELATIONS");
            if (static_cast<int>(values.size()) != 3 + count)
                throw ParseError("PRECEDENCE RELATIONS row declares " + std::to_string(count) +
                                     " successors but lists " + std::to_string(values.size() - 3),
                                 row.number);
            for (int i = 0; i < count; ++i) {
                const int succ = static_cast<int>(values[3 + i]);
                if (succ < 1 || succ > jobs)
                    throw StructuralError(raw.name + ": successor " + std::to_string(succ) +
                                          " out of range in PRECEDENCE RELATIONS");
                successors[job - 1].push_back(succ - 1);
            }
        }
    }

    // REQUESTS/DURATIONS: jobnr  mode  duration  r1 .. rK
    std::vector<int> durations(jobs, 0);
    std::vector<std::vector<int>> requirements(jobs);
    {
        auto rows = section_rows(lines, requests_at);
        if (static_cast<int>(rows.size()) != jobs)
            throw StructuralError(raw.name + ": REQUESTS/DURATIONS lists " +
                                  std::to_string(rows.size()) + " jobs but the file declares " +
                                  std::to_string(jobs));
        for (const auto& row : rows) {
            auto values = integers_on_line(row.text);
            if (values.size() < 3)
                throw ParseError("REQUESTS/DURATIONS row needs jobnr/mode/duration", row.number);
            const int job = static_cast<int>(values[0]);
            if (job < 1 || job > jobs)
                throw StructuralError(raw.name + ": job number " + std::to_string(job) +
                                      " out of range in REQUESTS/DURATIONS");
            durations[job - 1] = static_cast<int>(values[2]);
            requirements[job - 1].assign(values.begin() + 3, values.end());
        }
        if (declared_resources >= 0)
            for (int j = 0; j < jobs; ++j)
                if (static_cast<int>(requirements[j].size()) != declared_resources)
                    throw StructuralError(raw.name + ": job " + std::to_string(j + 1) + " lists " +
                                          std::to_string(requirements[j].size()) +
                                          " requests but the file declares " +
                                          std::to_string(declared_resources) + " resources");
    }

    // RESOURCEAVAILABILITIES: capacities on the first purely numeric line
    // (the "R 1  R 2 ..." caption would otherwise read as 1 2 ...)
    std::vector<int> capacities;
    {
        auto rows = section_rows(lines, avail_at);
        for (const auto& row : rows) {
            if (std::any_of(row.text.begin(), row.text.end(),
                            [](unsigned char c) { return std::isalpha(c); }))
                continue;
            auto values = integers_on_line(row.text);
            if (!values.empty()) {
                capacities.assign(values.begin(), values.end());
                break;
            }
        }
        if (capacities.empty())
            throw ParseError("RESOURCEAVAILABILITIES carries no capacities",
                             lines[avail_at].number);
    }

    std::vector<std::vector<int>> predecessors(jobs);
    for (int j = 0; j < jobs; ++j)
        for (int s : successors[j])
            predecessors[s].push_back(j);

    return make_instance(raw.name, n_real, std::move(durations), std::move(predecessors),
                         std::move(capacities), std::move(requirements));
}

BestKnownTable parse_best_known(std::istream& in) {
    BestKnownTable table;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#')
            continue;
        std::istringstream row(line);
        std::string id_token, makespan_token, extra;
        if (!(row >> id_token >> makespan_token))
            throw ParseError("expected \"<instance> <makespan>\"", number);
        if (row >> extra)
            throw ParseError("trailing content \"" + extra + "\"", number);

        int id, makespan;
        try {
            size_t used = 0;
            id = std::stoi(id_token, &used);
            if (used != id_token.size())
                throw std::invalid_argument(id_token);
            used = 0;
            makespan = std::stoi(makespan_token, &used);
            if (used != makespan_token.size())
                throw std::invalid_argument(makespan_token);
        } catch (const std::exception&) {
            throw ParseError("non-integer field in \"" + line + "\"", number);
        }
        if (makespan <= 0)
            throw ParseError("makespan must be positive", number);
        if (!table.entries.emplace(id, makespan).second)
            throw DuplicateKeyError("duplicate instance id " + std::to_string(id) + " on line " +
                                    std::to_string(number));
    }
    return table;
}

BestKnownTable parse_best_known(const std::string& text) {
    std::istringstream in(text);
    return parse_best_known(in);
}

std::string render_best_known(const BestKnownTable& table) {
    std::ostringstream out;
    for (const auto& [id, makespan] : table.entries)
        out << id << ' ' << makespan << '\n';
    return out.str();
}

std::optional<PsplibId> parse_psplib_stem(const std::string& stem) {
    if (stem.empty() || stem[0] != 'j')
        return std::nullopt;
    static const int datasets[] = {120, 90, 60, 30};
    for (int dataset : datasets) {
        const std::string prefix = "j" + std::to_string(dataset);
        if (stem.rfind(prefix, 0) != 0)
            continue;
        const auto underscore = stem.find('_', prefix.size());
        if (underscore == std::string::npos)
            continue;
        const std::string param = stem.substr(prefix.size(), underscore - prefix.size());
        const std::string inst = stem.substr(underscore + 1);
        if (param.empty() || inst.empty())
            continue;
        if (!std::all_of(param.begin(), param.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            !std::all_of(inst.begin(), inst.end(), [](unsigned char c) { return std::isdigit(c); }))
            continue;
        PsplibId id;
        id.dataset = dataset;
        id.param_set = std::stoi(param);
        id.instance = std::stoi(inst);
        if (id.param_set < 1 || id.instance < 1)
            continue;
        return id;
    }
    return std::nullopt;
}

} // namespace rcpsp
