#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "oracle.hpp"
#include "salbp/tuning.hpp"

using namespace salbp;
using salbp::testing::toy_instance;

TEST_CASE("grid axis covers -1.0 .. 1.0 in steps of 0.1") {
    CHECK(kGridSize == 21);
    CHECK(grid_value(0) == doctest::Approx(-1.0));
    CHECK(grid_value(10) == doctest::Approx(0.0));
    CHECK(grid_value(20) == doctest::Approx(1.0));
    for (int i = 1; i < kGridSize; ++i)
        CHECK(grid_value(i) - grid_value(i - 1) == doctest::Approx(0.1));
}

TEST_CASE("tune_grid on the diamond") {
    Instance toy = toy_instance();
    ProblemSpec spec{&toy, 2};
    TuneGrid grid = tune_grid(spec, 0, 1);
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j) CHECK(grid.values[i][j] >= 6);
    CHECK(grid.values[10][20] == 6);  // kappa = (0, 1)
    CHECK(grid.best_cell().value == 6);
}

TEST_CASE("tune_grid parallel path matches the serial reference") {
    std::mt19937_64 rng(3);
    Instance ins = oracle::random_instance(10, 0.3, 1, 9, rng);
    ProblemSpec spec{&ins, 3};
    TuneGrid serial = tune_grid(spec, 0, 1);
    TuneGrid parallel = tune_grid(spec, 0, 0);
    CHECK(serial.values == parallel.values);
}

TEST_CASE("tune cells never beat the brute-force optimum") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 5; ++iter) {
        Instance ins = oracle::random_instance(8, 0.3, 1, 10, rng);
        ProblemSpec spec{&ins, 2};
        int opt = oracle::brute_force_optimum(ins, 2);
        TuneGrid grid = tune_grid(spec);
        CHECK(grid.best_cell().value >= opt);
    }
}

TEST_CASE("tune_grid is reproducible") {
    Instance toy = toy_instance();
    ProblemSpec spec{&toy, 3};
    TuneGrid a = tune_grid(spec, 5);
    TuneGrid b = tune_grid(spec, 5);
    CHECK(a.values == b.values);
}

TEST_CASE("render_heatmap_pgm normalization") {
    TuneGrid grid;
    grid.instance_name = "g";
    grid.m = 2;
    for (auto& row : grid.values) row.fill(7);
    std::string uniform = render_heatmap_pgm(grid);
    CHECK(uniform.rfind("P2\n21 21\n255\n", 0) == 0);
    // every payload value is 255
    std::istringstream in(uniform);
    std::string tok;
    in >> tok >> tok >> tok >> tok;  // P2, w, h, maxval
    int v, count = 0, non255 = 0;
    while (in >> v) {
        ++count;
        if (v != 255) ++non255;
    }
    CHECK(count == 441);
    CHECK(non255 == 0);

    grid.values[0][0] = 5;  // best; the rest are worst
    std::string two = render_heatmap_pgm(grid);
    std::istringstream in2(two);
    in2 >> tok >> tok >> tok >> tok;
    std::vector<int> vals;
    while (in2 >> v) vals.push_back(v);
    CHECK(vals[0] == 255);
    for (size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] == 0);
}

TEST_CASE("grid CSV round-trip") {
    TuneGrid grid;
    grid.instance_name = "g";
    grid.m = 2;
    int counter = 11;
    for (auto& row : grid.values)
        for (int& cell : row) cell = counter++ % 97 + 3;
    TuneGrid parsed = parse_grid_csv(render_heatmap_csv(grid));
    CHECK(parsed.values == grid.values);
}

TEST_CASE("grid CSV carries one-decimal axis labels") {
    TuneGrid grid;
    for (auto& row : grid.values) row.fill(1);
    std::string csv = render_heatmap_csv(grid);
    CHECK(csv.find("-1.0,-0.9") != std::string::npos);
    CHECK(csv.find("0.9,1.0") != std::string::npos);
    CHECK(csv.rfind("kappa1\\kappa2,-1.0", 0) == 0);
}
