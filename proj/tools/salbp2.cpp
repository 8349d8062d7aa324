// salbp2 — assembly line balancing (type 2) solver and experiment driver.
//
// Subcommands: solve, tune, bench, validate, reverse, export-ip.
// Exit codes: 0 success, 1 usage or input error, 2 validation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "salbp/bench.hpp"
#include "salbp/ibs.hpp"
#include "salbp/io_util.hpp"
#include "salbp/tuning.hpp"

namespace {

using namespace salbp;

struct CommonOpts {
    std::string instance_path;
    int m = 0;
    double time_limit = 180.0;
    std::uint64_t seed = 1;
    double kappa1 = 0.0, kappa2 = 0.0;
    bool kappa_given = false;
    std::string kappa_table;
    double det_rate = 0.5;
    bool hp = false;
    bool strict_search = false;
    bool verbose = false;
};

GreedyWeights resolve_weights(const CommonOpts& opts, const std::string& instance_name) {
    if (opts.kappa_given) return {opts.kappa1, opts.kappa2};
    std::string table;
    if (!opts.kappa_table.empty()) {
        table = read_file(opts.kappa_table);
    } else {
        std::ifstream shipped("data/kappa_defaults.txt");
        if (shipped) {
            std::ostringstream buf;
            buf << shipped.rdbuf();
            table = buf.str();
        } else {
            table = default_kappa_table();
        }
    }
    if (auto w = lookup_kappa(table, instance_name)) return *w;
    return {0.0, 1.0};
}

IbsConfig make_config(const CommonOpts& opts) {
    IbsConfig config;
    config.time_limit_per_c = opts.time_limit;
    config.seed = opts.seed;
    config.det_rate = opts.det_rate;
    config.hp_mode = opts.hp;
    config.strict_search = opts.strict_search;
    if (opts.verbose) config.verbose_log = &std::cerr;
    return config;
}

void add_instance_opts(CLI::App* cmd, CommonOpts& opts, bool need_m) {
    cmd->add_option("--instance", opts.instance_path, "instance file (benchmark format)")
        ->required();
    auto* m_opt = cmd->add_option("-m,--stations", opts.m, "number of work stations");
    if (need_m) m_opt->required();
}

void add_solver_opts(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--time-limit", opts.time_limit,
                    "seconds of wall clock per cycle time (default 180)");
    cmd->add_option("--seed", opts.seed, "master random seed");
    auto* k1 = cmd->add_option("--kappa1", opts.kappa1, "processing-time greedy weight");
    auto* k2 = cmd->add_option("--kappa2", opts.kappa2, "successor-count greedy weight");
    k1->needs(k2);
    k2->needs(k1);
    cmd->add_option("--kappa-table", opts.kappa_table,
                    "per-graph weight table (default data/kappa_defaults.txt)");
    cmd->add_option("--det-rate", opts.det_rate,
                    "probability of a deterministic task choice (default 0.5)");
    cmd->add_flag("--hp", opts.hp, "high-performance variant");
    cmd->add_flag("--strict-search", opts.strict_search,
                  "run the literal beam search loop without early exit");
    cmd->add_flag("--verbose", opts.verbose, "per-cycle-time log on stderr");
    cmd->callback([&opts, k1] { opts.kappa_given = k1->count() > 0; });
}

int cmd_solve(const CommonOpts& opts, const std::string& output) {
    Instance instance = load_instance_file(opts.instance_path);
    ProblemSpec spec{&instance, opts.m};
    IbsConfig config = make_config(opts);
    config.weights = resolve_weights(opts, instance.name());
    IbsResult result = opts.hp ? run_ibs_hp(spec, config) : run_ibs(spec, config);
    std::cout << "cycle_time=" << result.best_cycle_time << "\n";
    std::string out_path = output.empty() ? opts.instance_path + ".sol" : output;
    atomic_write_file(out_path, serialize_solution(result.best_solution, result.best_cycle_time));
    return 0;
}

int cmd_tune(const CommonOpts& opts, const std::string& out_prefix, int jobs) {
    Instance instance = load_instance_file(opts.instance_path);
    ProblemSpec spec{&instance, opts.m};
    TuneGrid grid = tune_grid(spec, opts.seed, jobs);
    atomic_write_file(out_prefix + ".csv", render_heatmap_csv(grid));
    atomic_write_file(out_prefix + ".pgm", render_heatmap_pgm(grid));
    auto best = grid.best_cell();
    auto worst = grid.worst_cell();
    std::printf("best kappa1=%.1f kappa2=%.1f cycle_time=%d\n", best.kappa1, best.kappa2,
                best.value);
    std::printf("worst kappa1=%.1f kappa2=%.1f cycle_time=%d\n", worst.kappa1, worst.kappa2,
                worst.value);
    return 0;
}

int cmd_bench(const CommonOpts& opts, const std::string& manifest_path, int runs,
              const std::string& out_prefix, int jobs) {
    BenchManifest manifest = BenchManifest::load(manifest_path);
    IbsConfig config = make_config(opts);
    std::string base_dir;
    auto slash = manifest_path.find_last_of('/');
    if (slash != std::string::npos) base_dir = manifest_path.substr(0, slash);
    BenchReport report = run_benchmark(manifest, runs, config, base_dir, jobs);
    atomic_write_file(out_prefix + "_report.csv", render_report_csv(report));
    atomic_write_file(out_prefix + "_summary.csv", render_summary_csv(report));
    std::cout << render_summary_csv(report);
    return 0;
}

int cmd_validate(const CommonOpts& opts, int C, const std::string& solution_path) {
    Instance instance = load_instance_file(opts.instance_path);
    ProblemSpec spec{&instance, opts.m};
    std::ifstream in(solution_path);
    if (!in) {
        std::cerr << "cannot open solution file '" << solution_path << "'\n";
        return 1;
    }
    Solution sol = parse_solution(in);
    auto violations = validate_solution(spec, sol, C);
    if (violations.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& v : violations) std::cout << v.message << "\n";
    return 2;
}

int cmd_reverse(const CommonOpts& opts, const std::string& output) {
    Instance instance = load_instance_file(opts.instance_path);
    atomic_write_file(output, serialize_instance(reverse_instance(instance)));
    return 0;
}

int cmd_export_ip(const CommonOpts& opts, const std::string& output) {
    Instance instance = load_instance_file(opts.instance_path);
    ProblemSpec spec{&instance, opts.m};
    atomic_write_file(output, export_ip_model(spec));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterative beam search solver for assembly line balancing (type 2)"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string output, out_prefix = "tune", manifest_path;
    int runs = 20, jobs = 0, validate_c = 0;
    std::string solution_path;

    auto* solve = app.add_subcommand("solve", "minimize the cycle time of an instance");
    add_instance_opts(solve, opts, true);
    add_solver_opts(solve, opts);
    solve->add_option("--output", output, "solution file (default <instance>.sol)");

    auto* tune = app.add_subcommand("tune", "sweep the 21x21 greedy-weight grid");
    add_instance_opts(tune, opts, true);
    tune->add_option("--seed", opts.seed, "master random seed");
    tune->add_option("--out-prefix", out_prefix, "output prefix for .csv/.pgm (default tune)");
    tune->add_option("--jobs", jobs, "worker threads (0 = all, 1 = serial)");

    auto* bench = app.add_subcommand("bench", "multi-run statistics against a manifest");
    bench->add_option("--manifest", manifest_path, "CSV: file,graph,m,bks,optimal")->required();
    bench->add_option("--runs", runs, "runs per entry (default 20)");
    bench->add_option("--jobs", jobs, "worker threads (0 = all, 1 = serial)");
    bench->add_option("--out-prefix", out_prefix, "output prefix (default bench)")
        ->default_val("bench");
    add_solver_opts(bench, opts);

    auto* validate = app.add_subcommand("validate", "check a solution file");
    add_instance_opts(validate, opts, true);
    validate->add_option("-C,--cycle-time", validate_c, "cycle time to check against")
        ->required();
    validate->add_option("--solution", solution_path, "solution file")->required();

    auto* reverse = app.add_subcommand("reverse", "write the reverse instance");
    add_instance_opts(reverse, opts, false);
    reverse->add_option("--output", output, "output file")->required();

    auto* export_ip = app.add_subcommand("export-ip", "write the IP model as LP text");
    add_instance_opts(export_ip, opts, true);
    export_ip->add_option("--output", output, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*solve) return cmd_solve(opts, output);
        if (*tune) return cmd_tune(opts, out_prefix, jobs);
        if (*bench) return cmd_bench(opts, manifest_path, runs, out_prefix, jobs);
        if (*validate) return cmd_validate(opts, validate_c, solution_path);
        if (*reverse) return cmd_reverse(opts, output);
        if (*export_ip) return cmd_export_ip(opts, output);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
