#include "salbp/beam_search.hpp"

#include <algorithm>
#include <unordered_map>

namespace salbp {

PartialSolution PartialSolution::empty(const Instance& instance) {
    PartialSolution p;
    const int n = instance.n();
    p.assigned.assign(n, 0);
    p.pending_preds.resize(n);
    for (int task = 1; task <= n; ++task)
        p.pending_preds[task - 1] = static_cast<int>(instance.direct_pred(task).size());
    return p;
}

namespace {

void assign_task(PartialSolution& partial, const Instance& instance, int task) {
    partial.assigned[task - 1] = 1;
    partial.assigned_time += instance.time(task);
    ++partial.assigned_count;
    for (int succ : instance.direct_succ(task)) --partial.pending_preds[succ - 1];
}

// FNV-1a over the sorted station content; used only to bucket candidates for
// the set-equality duplicate check.
std::uint64_t station_hash(const std::vector<int>& station) {
    std::uint64_t h = 1469598103934665603ULL;
    for (int task : station) {
        h ^= static_cast<std::uint64_t>(task);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::vector<int> extend_partial_solution(PartialSolution& partial, const Instance& instance,
                                         int l, int C, const GreedyTable& greedy,
                                         const BsParams& params, std::mt19937_64& rng) {
    (void)l;  // the station index is implied by partial.filled() + 1
    std::vector<int> station;
    std::vector<int> avail, sat;
    int c_rem = C;

    const int n = instance.n();
    for (;;) {
        avail.clear();
        sat.clear();
        for (int task = 1; task <= n; ++task) {
            if (partial.assigned[task - 1] || partial.pending_preds[task - 1] != 0)
                continue;
            const int t = instance.time(task);
            if (t > c_rem) continue;
            avail.push_back(task);
            if (t == c_rem) sat.push_back(task);
        }
        if (avail.empty()) break;
        const int task = choose_task(avail, sat, greedy, params.det_rate, rng);
        c_rem -= instance.time(task);
        station.push_back(task);
        assign_task(partial, instance, task);
    }

    std::sort(station.begin(), station.end());
    partial.stations.push_back(station);
    return station;
}

int lower_bound(const PartialSolution& partial, const Instance& instance, int C) {
    const long long remaining = instance.total_time() - partial.assigned_time;
    return static_cast<int>((remaining + C - 1) / C);
}

std::vector<PartialSolution> select_solutions(std::vector<PartialSolution> ext, int k_bw,
                                              const Instance& instance, int C) {
    std::stable_sort(ext.begin(), ext.end(),
                     [&](const PartialSolution& a, const PartialSolution& b) {
                         return lower_bound(a, instance, C) < lower_bound(b, instance, C);
                     });
    if (static_cast<int>(ext.size()) > k_bw) ext.resize(k_bw);
    return ext;
}

BsOutcome beam_search(const ProblemSpec& spec, int C, const BsParams& params,
                      const GreedyWeights& weights, std::mt19937_64& rng) {
    const Instance& instance = *spec.instance;
    const int n = instance.n();
    const int m = spec.m;
    BsOutcome outcome;

    const GreedyTable greedy = make_greedy_table(instance, C, weights);

    auto finish = [&](const PartialSolution& complete) {
        Solution sol;
        sol.instance_name = instance.name();
        sol.m = m;
        sol.stations = complete.stations;
        sol.stations.resize(m);  // pad with empty stations
        outcome.success = true;
        outcome.solution = std::move(sol);
    };

    std::vector<PartialSolution> beam;
    beam.push_back(PartialSolution::empty(instance));
    std::optional<PartialSolution> first_complete;

    int l = 0;
    while (!beam.empty()) {
        ++l;
        ++outcome.stats.beams_processed;
        std::vector<PartialSolution> ext;
        ext.reserve(beam.size() * static_cast<size_t>(params.k_ext));
        // station content -> previously generated stations, for the
        // set-equality duplicate filter
        std::unordered_map<std::uint64_t, std::vector<std::vector<int>>> seen;
        auto is_duplicate = [&](const std::vector<int>& station) {
            auto& bucket = seen[station_hash(station)];
            for (const auto& other : bucket)
                if (other == station) return true;
            bucket.push_back(station);
            return false;
        };
        for (const auto& parent : beam) {
            for (int e = 0; e < params.k_ext; ++e) {
                PartialSolution child = parent;
                std::vector<int> new_station =
                    extend_partial_solution(child, instance, l, C, greedy, params, rng);
                ++outcome.stats.extensions_generated;
                if (child.assigned_count == n) {
                    if (params.early_exit) {
                        finish(child);
                        return outcome;
                    }
                    if (params.dup_check_generated) is_duplicate(new_station);
                    if (!first_complete) first_complete = std::move(child);
                    continue;
                }
                if (l >= m) {
                    if (params.dup_check_generated) is_duplicate(new_station);
                    continue;
                }
                if (is_duplicate(new_station)) continue;
                ext.push_back(std::move(child));
            }
        }
        beam = select_solutions(std::move(ext), params.k_bw, instance, C);
    }

    if (first_complete) finish(*first_complete);
    return outcome;
}

}  // namespace salbp
