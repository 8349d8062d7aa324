#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "salbp/bench.hpp"
#include "salbp/io_util.hpp"

using namespace salbp;

namespace {

struct TempDir {
    std::string path;
    explicit TempDir(const std::string& name) : path("/tmp/salbp_test_" + name) {
        std::filesystem::create_directories(path);
    }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

IbsConfig fast_config() {
    IbsConfig config;
    config.time_limit_per_c = 0.3;
    config.seed = 7;
    return config;
}

}  // namespace

TEST_CASE("mrd") {
    std::vector<std::pair<int, int>> equal{{47, 47}, {25, 25}};
    CHECK(mrd(equal) == doctest::Approx(0.0));

    std::vector<std::pair<int, int>> one{{48, 47}};
    CHECK(mrd(one) == doctest::Approx(2.1277).epsilon(1e-3));

    std::vector<std::pair<int, int>> two{{47, 47}, {52, 47}};
    CHECK(mrd(two) == doctest::Approx(5.3191).epsilon(1e-3));
}

TEST_CASE("manifest parsing") {
    BenchManifest manifest = BenchManifest::parse(
        "file,graph,m,bks,optimal\n"
        "toy.in2,Toy,2,6,1\n"
        "toy.in2,Toy,1,11,0\n");
    REQUIRE(manifest.entries.size() == 2);
    CHECK(manifest.entries[0].graph == "Toy");
    CHECK(manifest.entries[0].m == 2);
    CHECK(manifest.entries[0].bks == 6);
    CHECK(manifest.entries[0].bks_proven_optimal);
    CHECK(!manifest.entries[1].bks_proven_optimal);

    CHECK_THROWS(BenchManifest::parse("toy.in2,Toy,2\n"));
    CHECK_THROWS(BenchManifest::parse("toy.in2,Toy,0,6,1\n"));
}

TEST_CASE("run_benchmark on the diamond") {
    TempDir dir("bench");
    atomic_write_file(dir.file("toy.in2"), salbp::testing::kToyText);
    BenchManifest manifest =
        BenchManifest::parse("toy.in2,Toy,2,6,1\ntoy.in2,Toy,1,11,1\n");
    BenchReport report = run_benchmark(manifest, 5, fast_config(), dir.path, 1);

    REQUIRE(report.per_entry.size() == 2);
    const RunStats& stats = report.per_entry[0];
    CHECK(stats.best == 6);
    CHECK(stats.avg == doctest::Approx(6.0));
    CHECK(stats.stddev == doctest::Approx(0.0));
    CHECK(stats.flag == "ok");
    CHECK(stats.runs == 5);
    REQUIRE(!stats.best_solutions.empty());
    Instance toy = salbp::testing::toy_instance();
    CHECK(validate_solution({&toy, 2}, stats.best_solutions[0], stats.best).empty());

    REQUIRE(report.summary.size() == 2);  // one graph + "all"
    CHECK(report.summary[0].mrd_percent == doctest::Approx(0.0));
    CHECK(report.summary[0].n_best_found == 2);
    CHECK(report.summary.back().group == "all");
}

TEST_CASE("single run has zero standard deviation") {
    TempDir dir("bench1");
    atomic_write_file(dir.file("toy.in2"), salbp::testing::kToyText);
    BenchManifest manifest = BenchManifest::parse("toy.in2,Toy,2,6,1\n");
    BenchReport report = run_benchmark(manifest, 1, fast_config(), dir.path, 1);
    CHECK(report.per_entry[0].stddev == doctest::Approx(0.0));
    CHECK(report.per_entry[0].time_std == doctest::Approx(0.0));
}

TEST_CASE("miss and new_best flags") {
    TempDir dir("bench2");
    atomic_write_file(dir.file("toy.in2"), salbp::testing::kToyText);
    // bks 5 is unreachable (optimum 6) => miss; bks 7 is beaten => new_best
    BenchManifest manifest =
        BenchManifest::parse("toy.in2,Toy,2,5,0\ntoy.in2,Toy,2,7,0\n");
    BenchReport report = run_benchmark(manifest, 2, fast_config(), dir.path, 1);
    CHECK(report.per_entry[0].flag == "miss");
    CHECK(report.per_entry[1].flag == "new_best");
    // relative deviations: +20% and -14.29%, mean 2.857
    CHECK(report.summary[0].mrd_percent == doctest::Approx(2.857).epsilon(1e-3));
}

TEST_CASE("missing instance files never abort the batch") {
    TempDir dir("bench3");
    atomic_write_file(dir.file("toy.in2"), salbp::testing::kToyText);
    BenchManifest manifest =
        BenchManifest::parse("nope.in2,Ghost,2,6,1\ntoy.in2,Toy,2,6,1\n");
    BenchReport report = run_benchmark(manifest, 2, fast_config(), dir.path, 1);
    REQUIRE(report.per_entry.size() == 2);
    CHECK(!report.per_entry[0].error.empty());
    CHECK(report.per_entry[1].best == 6);
    std::string csv = render_report_csv(report);
    CHECK(csv.find("error") != std::string::npos);
}

TEST_CASE("parallel and serial benchmark runs agree") {
    TempDir dir("bench4");
    atomic_write_file(dir.file("toy.in2"), salbp::testing::kToyText);
    BenchManifest manifest =
        BenchManifest::parse("toy.in2,Toy,2,6,1\ntoy.in2,Toy,3,4,1\n");
    BenchReport serial = run_benchmark(manifest, 4, fast_config(), dir.path, 1);
    BenchReport parallel = run_benchmark(manifest, 4, fast_config(), dir.path, 0);
    REQUIRE(serial.per_entry.size() == parallel.per_entry.size());
    for (size_t i = 0; i < serial.per_entry.size(); ++i) {
        CHECK(serial.per_entry[i].best == parallel.per_entry[i].best);
        CHECK(serial.per_entry[i].avg == doctest::Approx(parallel.per_entry[i].avg));
    }
}

TEST_CASE("report CSV layout") {
    TempDir dir("bench5");
    atomic_write_file(dir.file("toy.in2"), salbp::testing::kToyText);
    BenchManifest manifest = BenchManifest::parse("toy.in2,Toy,2,6,1\n");
    BenchReport report = run_benchmark(manifest, 2, fast_config(), dir.path, 1);
    std::string csv = render_report_csv(report);
    CHECK(csv.rfind("graph,m,bks,best,avg,std,time_avg,time_std,flag\n", 0) == 0);
    CHECK(csv.find("Toy,2,6,6,6.00,0.00") != std::string::npos);
    std::string summary = render_summary_csv(report);
    CHECK(summary.rfind("group,entries,mrd_percent,avg_time,n_best_found\n", 0) == 0);
}
