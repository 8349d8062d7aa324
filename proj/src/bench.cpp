#include "salbp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "salbp/rng.hpp"

namespace salbp {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double sample_std(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / (xs.size() - 1));
}

}  // namespace

BenchManifest BenchManifest::parse(const std::string& csv) {
    BenchManifest manifest;
    std::istringstream in(csv);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("file,", 0) == 0) continue;  // header
        auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": expected 'file,graph,m,bks,optimal'");
        BenchEntry e;
        e.file = fields[0];
        e.graph = fields[1];
        e.m = std::stoi(fields[2]);
        e.bks = std::stoi(fields[3]);
        e.bks_proven_optimal = fields[4] == "1";
        if (e.m < 1 || e.bks < 1)
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": m and bks must be positive");
        manifest.entries.push_back(std::move(e));
    }
    return manifest;
}

BenchManifest BenchManifest::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

double mrd(std::span<const std::pair<int, int>> results) {
    if (results.empty()) return 0.0;
    double acc = 0.0;
    for (auto [value, bks] : results)
        acc += 100.0 * (value - bks) / bks;
    return acc / static_cast<double>(results.size());
}

BenchReport run_benchmark(const BenchManifest& manifest, int runs, const IbsConfig& config,
                          const std::string& base_dir, int jobs) {
    BenchReport report;
    const int n_entries = static_cast<int>(manifest.entries.size());

    struct RunOutcome {
        int cycle_time = 0;
        double time_to_best = 0.0;
        bool ok = false;
        Solution solution;
        std::string error;
    };
    std::vector<RunOutcome> outcomes(static_cast<size_t>(n_entries) * runs);

    // Instances load up front so per-run work is pure compute.
    std::vector<Instance> instances;
    std::vector<std::string> load_errors(n_entries);
    instances.reserve(n_entries);
    for (const auto& entry : manifest.entries) {
        std::string path = entry.file;
        if (!base_dir.empty() && path.front() != '/')
            path = base_dir + "/" + path;
        try {
            instances.push_back(load_instance_file(path));
        } catch (const std::exception& ex) {
            load_errors[instances.size()] = ex.what();
            // placeholder keeps indices aligned
            instances.push_back(Instance("missing", {1}, {}));
        }
    }

    const int total_jobs = n_entries * runs;
    auto run_one = [&](int flat) {
        const int entry_idx = flat / runs;
        const int run_idx = flat % runs;
        if (!load_errors[entry_idx].empty()) return;
        const BenchEntry& entry = manifest.entries[entry_idx];
        ProblemSpec spec{&instances[entry_idx], entry.m};
        IbsConfig run_config = config;
        run_config.verbose_log = nullptr;
        run_config.seed = derive_seed(config.seed,
                                      static_cast<std::uint64_t>(entry_idx) * 1000003 + run_idx);
        RunOutcome& out = outcomes[static_cast<size_t>(flat)];
        try {
            IbsResult result = run_ibs(spec, run_config);
            out.cycle_time = result.best_cycle_time;
            out.time_to_best = result.time_to_best;
            out.solution = std::move(result.best_solution);
            out.ok = true;
        } catch (const std::exception& ex) {
            out.error = ex.what();
        }
    };

#ifdef _OPENMP
    if (jobs != 1) {
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int flat = 0; flat < total_jobs; ++flat) run_one(flat);
    } else
#else
    (void)jobs;
#endif
    {
        for (int flat = 0; flat < total_jobs; ++flat) run_one(flat);
    }

    for (int entry_idx = 0; entry_idx < n_entries; ++entry_idx) {
        const BenchEntry& entry = manifest.entries[entry_idx];
        RunStats stats;
        stats.graph = entry.graph;
        stats.m = entry.m;
        stats.bks = entry.bks;
        stats.runs = runs;
        if (!load_errors[entry_idx].empty()) {
            stats.error = load_errors[entry_idx];
            report.per_entry.push_back(std::move(stats));
            continue;
        }
        std::vector<double> values, times;
        for (int r = 0; r < runs; ++r) {
            const RunOutcome& out = outcomes[static_cast<size_t>(entry_idx) * runs + r];
            if (!out.ok) {
                stats.error = out.error;
                continue;
            }
            values.push_back(out.cycle_time);
            times.push_back(out.time_to_best);
            if (stats.best == 0 || out.cycle_time < stats.best) {
                stats.best = out.cycle_time;
                stats.best_solutions.assign(1, out.solution);
            }
        }
        if (!values.empty()) {
            stats.avg = std::accumulate(values.begin(), values.end(), 0.0) / values.size();
            stats.stddev = sample_std(values, stats.avg);
            stats.time_avg = std::accumulate(times.begin(), times.end(), 0.0) / times.size();
            stats.time_std = sample_std(times, stats.time_avg);
            stats.flag = stats.best < entry.bks   ? "new_best"
                         : stats.best > entry.bks ? "miss"
                                                  : "ok";
        }
        report.per_entry.push_back(std::move(stats));
    }

    // Per-graph summaries plus an "all" row, in first-seen graph order.
    std::vector<std::string> graph_order;
    std::map<std::string, std::vector<const RunStats*>> by_graph;
    for (const auto& stats : report.per_entry) {
        if (!stats.error.empty()) continue;
        if (!by_graph.count(stats.graph)) graph_order.push_back(stats.graph);
        by_graph[stats.graph].push_back(&stats);
    }
    auto summarize = [](const std::string& name, const std::vector<const RunStats*>& rows) {
        SummaryRow row;
        row.group = name;
        row.n_entries = static_cast<int>(rows.size());
        std::vector<std::pair<int, int>> pairs;
        for (const auto* stats : rows) {
            pairs.emplace_back(stats->best, stats->bks);
            row.avg_time += stats->time_avg;
            if (stats->best <= stats->bks) ++row.n_best_found;
        }
        row.mrd_percent = mrd(pairs);
        if (!rows.empty()) row.avg_time /= static_cast<double>(rows.size());
        return row;
    };
    std::vector<const RunStats*> all_rows;
    for (const auto& graph : graph_order) {
        report.summary.push_back(summarize(graph, by_graph[graph]));
        all_rows.insert(all_rows.end(), by_graph[graph].begin(), by_graph[graph].end());
    }
    report.summary.push_back(summarize("all", all_rows));
    return report;
}

std::string render_report_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "graph,m,bks,best,avg,std,time_avg,time_std,flag\n";
    for (const auto& stats : report.per_entry) {
        if (!stats.error.empty()) {
            os << stats.graph << "," << stats.m << "," << stats.bks << ",,,,,,"
               << "error\n";
            continue;
        }
        os << stats.graph << "," << stats.m << "," << stats.bks << "," << stats.best << ","
           << fmt2(stats.avg) << "," << fmt2(stats.stddev) << "," << fmt2(stats.time_avg)
           << "," << fmt2(stats.time_std) << "," << stats.flag << "\n";
    }
    return os.str();
}

std::string render_summary_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "group,entries,mrd_percent,avg_time,n_best_found\n";
    for (const auto& row : report.summary)
        os << row.group << "," << row.n_entries << "," << fmt2(row.mrd_percent) << ","
           << fmt2(row.avg_time) << "," << row.n_best_found << "\n";
    return os.str();
}

}  // namespace salbp
