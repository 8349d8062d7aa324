// Timing comparison of the serial reference paths against the OpenMP
// implementations for the two embarrassingly parallel workloads: the 441-cell
// greedy-weight sweep and the multi-run benchmark harness. Also checks that
// both paths produce identical results.
//
// Usage: bench_compare [n_tasks] [stations]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <utility>
#include <vector>

#include "salbp/bench.hpp"
#include "salbp/io_util.hpp"
#include "salbp/tuning.hpp"

using namespace salbp;

namespace {

Instance synthetic_instance(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> time_dist(1, 20);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> times(n);
    for (int& t : times) t = time_dist(rng);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng) < 0.15) arcs.emplace_back(i, j);
    return Instance("synthetic", std::move(times), std::move(arcs));
}

template <typename F>
double time_seconds(F&& work) {
    auto start = std::chrono::steady_clock::now();
    work();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 30;
    int m = argc > 2 ? std::atoi(argv[2]) : 5;
    Instance instance = synthetic_instance(n, 99);
    ProblemSpec spec{&instance, m};
    std::printf("instance: %d tasks, %zu arcs, %d stations\n\n", instance.n(),
                instance.arcs().size(), m);

    TuneGrid serial_grid, parallel_grid;
    double tune_serial = time_seconds([&] { serial_grid = tune_grid(spec, 0, 1); });
    double tune_parallel = time_seconds([&] { parallel_grid = tune_grid(spec, 0, 0); });
    bool tune_match = serial_grid.values == parallel_grid.values;
    std::printf("weight sweep (441 cells): serial %.2fs, parallel %.2fs, speedup %.2fx, %s\n",
                tune_serial, tune_parallel, tune_serial / tune_parallel,
                tune_match ? "grids identical" : "GRIDS DIFFER");

    // benchmark harness: the same instance at several station counts, 4 runs
    std::string dir = "/tmp/salbp_bench_compare";
    std::filesystem::create_directories(dir);
    atomic_write_file(dir + "/synthetic.in2", serialize_instance(instance));
    std::string manifest_text;
    for (int stations : {m, m + 1, m + 2, m + 3})
        manifest_text += "synthetic.in2,Synthetic," + std::to_string(stations) + ",1,0\n";
    BenchManifest manifest = BenchManifest::parse(manifest_text);
    IbsConfig config;
    config.time_limit_per_c = 0.5;
    config.seed = 7;

    BenchReport serial_report, parallel_report;
    double bench_serial =
        time_seconds([&] { serial_report = run_benchmark(manifest, 4, config, dir, 1); });
    double bench_parallel =
        time_seconds([&] { parallel_report = run_benchmark(manifest, 4, config, dir, 0); });
    bool bench_match = serial_report.per_entry.size() == parallel_report.per_entry.size();
    for (size_t i = 0; bench_match && i < serial_report.per_entry.size(); ++i)
        bench_match = serial_report.per_entry[i].best == parallel_report.per_entry[i].best &&
                      serial_report.per_entry[i].avg == parallel_report.per_entry[i].avg;
    std::printf("bench harness (4 entries x 4 runs): serial %.2fs, parallel %.2fs, "
                "speedup %.2fx, %s\n",
                bench_serial, bench_parallel, bench_serial / bench_parallel,
                bench_match ? "reports identical" : "REPORTS DIFFER");

    return tune_match && bench_match ? 0 : 1;
}
