#include "instance_gen.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "rcpsp/rng.hpp"

namespace rcpsp::harness {

ProjectInstance generate_instance(const GenConfig& config) {
    Rng rng(mix64(config.seed));
    const int n_real = config.n_real;
    const int n = n_real + 2;
    const int sink = n_real + 1;
    const int k = config.n_resources;

    std::vector<int> durations(n, 0);
    for (int j = 1; j <= n_real; ++j)
        durations[j] = rng_int(rng, 1, config.max_duration);

    // Predecessors among nearby lower-numbered activities; the dummy source
    // is a candidate inside the window, which gives parallel project roots.
    std::vector<std::vector<int>> predecessors(n);
    for (int j = 1; j <= n_real; ++j) {
        const int lo = std::max(0, j - config.locality_window);
        const int span = j - lo;
        const int want = std::min(config.max_predecessors, span);
        const int count = want <= 1 ? 1 : rng_int(rng, 1, want);
        auto& preds = predecessors[j];
        while (static_cast<int>(preds.size()) < count) {
            const int p = rng_int(rng, lo, j - 1);
            if (std::find(preds.begin(), preds.end(), p) == preds.end())
                preds.push_back(p);
        }
        std::sort(preds.begin(), preds.end());
    }
    // leaves feed the sink
    std::vector<char> has_successor(n, 0);
    for (int j = 1; j <= n_real; ++j)
        for (int p : predecessors[j])
            has_successor[p] = 1;
    for (int j = 0; j <= n_real; ++j)
        if (!has_successor[j])
            predecessors[sink].push_back(j);

    std::vector<std::vector<int>> requirements(n, std::vector<int>(k, 0));
    for (int j = 1; j <= n_real; ++j)
        for (int r = 0; r < k; ++r)
            if (rng_unit(rng) < config.request_probability)
                requirements[j][r] = rng_int(rng, 1, config.max_request);

    // critical path ignoring resources (activities are topologically numbered)
    std::vector<int> longest(n, 0);
    for (int j = 1; j < n; ++j)
        for (int p : predecessors[j])
            longest[j] = std::max(longest[j], longest[p] + durations[p]);
    const int cp = std::max(1, longest[sink] + 0);

    std::vector<int> capacities(k, 1);
    for (int r = 0; r < k; ++r) {
        long long demand = 0;
        int peak_single = 0;
        for (int j = 1; j <= n_real; ++j) {
            demand += static_cast<long long>(requirements[j][r]) * durations[j];
            peak_single = std::max(peak_single, requirements[j][r]);
        }
        const double tightness = 0.9 + 0.5 * rng_unit(rng);
        const int scaled = static_cast<int>(tightness * static_cast<double>(demand) / cp + 0.5);
        capacities[r] = std::max({1, peak_single, scaled});
    }

    return make_instance(config.name, n_real, std::move(durations), std::move(predecessors),
                         std::move(capacities), std::move(requirements));
}

std::string render_sm(const ProjectInstance& inst) {
    const int jobs = inst.total_activities();
    const int k = inst.resource_count();
    const char* rule =
        "************************************************************************\n";

    std::ostringstream out;
    out << rule;
    out << "file with basedata            : " << (inst.name.empty() ? "generated" : inst.name)
        << "\n";
    out << "initial value random generator: 0\n";
    out << rule;
    out << "projects                      :  1\n";
    out << "jobs (incl. supersource/sink ):  " << jobs << "\n";
    out << "horizon                       :  " << inst.horizon() << "\n";
    out << "RESOURCES\n";
    out << "  - renewable                 :  " << k << "   R\n";
    out << "  - nonrenewable              :  0   N\n";
    out << "  - doubly constrained        :  0   D\n";
    out << rule;
    out << "PROJECT INFORMATION:\n";
    out << "pronr.  #jobs rel.date duedate tardcost  MPM-Time\n";
    out << "    1    " << std::setw(3) << inst.n_real << "      0       " << inst.horizon()
        << "        0       " << inst.horizon() << "\n";
    out << rule;
    out << "PRECEDENCE RELATIONS:\n";
    out << "jobnr.    #modes  #successors   successors\n";
    for (int j = 0; j < jobs; ++j) {
        out << std::setw(4) << j + 1 << "        1          " << inst.successors[j].size()
            << "        ";
        for (int s : inst.successors[j])
            out << "  " << s + 1;
        out << "\n";
    }
    out << rule;
    out << "REQUESTS/DURATIONS:\n";
    out << "jobnr. mode duration";
    for (int r = 0; r < k; ++r)
        out << "  R " << r + 1;
    out << "\n";
    out << "------------------------------------------------------------------------\n";
    for (int j = 0; j < jobs; ++j) {
        out << std::setw(4) << j + 1 << "     1    " << std::setw(2) << inst.durations[j] << "  ";
        for (int r = 0; r < k; ++r)
            out << "  " << std::setw(2) << inst.requirements[j][r];
        out << "\n";
    }
    out << rule;
    out << "RESOURCEAVAILABILITIES:\n";
    out << " ";
    for (int r = 0; r < k; ++r)
        out << " R " << r + 1;
    out << "\n";
    out << " ";
    for (int r = 0; r < k; ++r)
        out << " " << std::setw(3) << inst.capacities[r];
    out << "\n";
    out << rule;
    return out.str();
}

} // namespace rcpsp::harness
