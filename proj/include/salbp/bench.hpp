#ifndef SALBP_BENCH_HPP
#define SALBP_BENCH_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "salbp/ibs.hpp"

namespace salbp {

/// One line of the best-known-solutions manifest:
/// `file,graph,m,bks,optimal(0|1)`.
struct BenchEntry {
    std::string file;
    std::string graph;
    int m = 0;
    int bks = 0;
    bool bks_proven_optimal = false;
};

struct BenchManifest {
    std::vector<BenchEntry> entries;

    /// Parse a manifest CSV. Relative instance paths are resolved against
    /// `base_dir` when the caller loads the instances.
    static BenchManifest parse(const std::string& csv);
    static BenchManifest load(const std::string& path);
};

/// Multi-run statistics for one manifest entry.
struct RunStats {
    std::string graph;
    int m = 0;
    int bks = 0;
    int best = 0;
    double avg = 0.0;
    double stddev = 0.0;  // sample (n-1) standard deviation
    double time_avg = 0.0;
    double time_std = 0.0;
    int runs = 0;
    std::string flag;   // ok | new_best | miss
    std::string error;  // nonempty when the entry failed to run
    std::vector<Solution> best_solutions;  // one stored witness per entry
};

struct SummaryRow {
    std::string group;
    double mrd_percent = 0.0;
    double avg_time = 0.0;
    int n_best_found = 0;
    int n_entries = 0;
};

struct BenchReport {
    std::vector<RunStats> per_entry;
    std::vector<SummaryRow> summary;  // per graph, plus a trailing "all" row
};

/// Mean over entries of 100 * (value - bks) / bks.
double mrd(std::span<const std::pair<int, int>> results);

/// `runs` independently seeded IBS executions per manifest entry. Entries
/// whose instance file fails to load are recorded with an error and do not
/// abort the batch. jobs: 0 = all hardware threads, 1 = serial.
BenchReport run_benchmark(const BenchManifest& manifest, int runs, const IbsConfig& config,
                          const std::string& base_dir = "", int jobs = 0);

std::string render_report_csv(const BenchReport& report);
std::string render_summary_csv(const BenchReport& report);

}  // namespace salbp

#endif
