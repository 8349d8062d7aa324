#include "salbp/solution.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace salbp {

std::vector<Violation> validate_solution(const ProblemSpec& spec, const Solution& sol, int C) {
    const Instance& ins = *spec.instance;
    const int n = ins.n();
    std::vector<Violation> out;

    if (static_cast<int>(sol.stations.size()) != spec.m) {
        std::ostringstream os;
        os << "solution has " << sol.stations.size() << " stations, expected " << spec.m;
        out.push_back({Violation::Kind::WrongStationCount, 0, 0, os.str()});
        return out;
    }

    std::vector<int> station_of(n + 1, 0);
    for (int s = 1; s <= spec.m; ++s) {
        long long load = 0;
        for (int task : sol.stations[s - 1]) {
            if (task < 1 || task > n) {
                std::ostringstream os;
                os << "unknown task " << task << " in station " << s;
                out.push_back({Violation::Kind::UnknownTask, task, s, os.str()});
                continue;
            }
            if (station_of[task] != 0) {
                std::ostringstream os;
                os << "task " << task << " assigned to stations " << station_of[task]
                   << " and " << s;
                out.push_back({Violation::Kind::MultiplyAssigned, task, s, os.str()});
                continue;
            }
            station_of[task] = s;
            load += ins.time(task);
        }
        if (load > C) {
            std::ostringstream os;
            os << "station " << s << " load " << load << " exceeds cycle time " << C;
            out.push_back({Violation::Kind::Capacity, 0, s, os.str()});
        }
    }

    for (int task = 1; task <= n; ++task) {
        if (station_of[task] == 0) {
            std::ostringstream os;
            os << "task " << task << " is not assigned";
            out.push_back({Violation::Kind::NotAssigned, task, 0, os.str()});
        }
    }

    for (int task = 1; task <= n; ++task) {
        if (station_of[task] == 0) continue;
        for (int p : ins.pred_set(task)) {
            if (station_of[p] != 0 && station_of[p] > station_of[task]) {
                std::ostringstream os;
                os << "task " << task << " in station " << station_of[task]
                   << " precedes its predecessor " << p << " in station " << station_of[p];
                out.push_back({Violation::Kind::Precedence, task, station_of[task], os.str()});
                break;
            }
        }
    }
    return out;
}

int cycle_time(const Solution& sol, const Instance& instance) {
    int best = 0;
    for (const auto& station : sol.stations) {
        int load = 0;
        for (int task : station) load += instance.time(task);
        best = std::max(best, load);
    }
    return best;
}

Solution reverse_solution(const Solution& sol) {
    Solution out = sol;
    std::reverse(out.stations.begin(), out.stations.end());
    return out;
}

std::string serialize_solution(const Solution& sol, int C) {
    std::ostringstream os;
    os << sol.instance_name << " " << sol.m << " " << C << "\n";
    for (const auto& station : sol.stations) {
        for (size_t i = 0; i < station.size(); ++i) {
            if (i) os << " ";
            os << station[i];
        }
        os << "\n";
    }
    return os.str();
}

Solution parse_solution(std::istream& in) {
    Solution sol;
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(ParseError::Kind::SyntaxError, 1, "missing solution header");
    {
        std::istringstream hs(line);
        int C = 0;
        if (!(hs >> sol.instance_name >> sol.m >> C) || sol.m < 1)
            throw ParseError(ParseError::Kind::SyntaxError, 1,
                             "expected header 'name m C', got '" + line + "'");
    }
    int line_no = 1;
    for (int s = 0; s < sol.m; ++s) {
        if (!std::getline(in, line))
            throw ParseError(ParseError::Kind::SyntaxError, line_no + 1,
                             "missing line for station " + std::to_string(s + 1));
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<int> tasks;
        int t;
        while (ls >> t) tasks.push_back(t);
        std::sort(tasks.begin(), tasks.end());
        sol.stations.push_back(std::move(tasks));
    }
    return sol;
}

Solution parse_solution_text(const std::string& text) {
    std::istringstream in(text);
    return parse_solution(in);
}

}  // namespace salbp
