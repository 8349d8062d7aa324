#include "salbp/tuning.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "salbp/beam_search.hpp"
#include "salbp/rng.hpp"

namespace salbp {

namespace {

std::string format_kappa(double v) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

}  // namespace

TuneGrid::Cell TuneGrid::best_cell() const {
    Cell best{grid_value(0), grid_value(0), values[0][0]};
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j)
            if (values[i][j] < best.value)
                best = {grid_value(i), grid_value(j), values[i][j]};
    return best;
}

TuneGrid::Cell TuneGrid::worst_cell() const {
    Cell worst{grid_value(0), grid_value(0), values[0][0]};
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j)
            if (values[i][j] > worst.value)
                worst = {grid_value(i), grid_value(j), values[i][j]};
    return worst;
}

int tune_cell(const ProblemSpec& spec, const GreedyWeights& weights, std::uint64_t seed) {
    const Instance reversed = reverse_instance(*spec.instance);
    const ProblemSpec reversed_spec{&reversed, spec.m};
    const int start_c = starting_cycle_time(spec);
    const long long sum_t = spec.instance->total_time();

    // All choices are deterministic (det_rate = 1), so the rng streams are
    // never consulted; they exist only to keep the beam search signature.
    std::uint64_t app = 0;
    auto run_bs = [&](const ProblemSpec& s, int C, const BsParams& params) {
        auto rng = make_stream(seed, app++);
        return beam_search(s, C, params, weights, rng);
    };

    BsParams phase1{5, 2};
    phase1.det_rate = 1.0;
    BsParams phase2{150, 20};
    phase2.det_rate = 1.0;

    // Phase 1 as in the full scheme, deterministic.
    int C = start_c;
    for (;;) {
        if (run_bs(spec, C, phase1).success) break;
        if (run_bs(reversed_spec, C, phase1).success) break;
        if (C >= sum_t) throw std::logic_error("phase 1 failed at C = sum of times");
        ++C;
    }

    // Phase 2 collapsed to one deterministic application per cycle time.
    int best = C;
    for (C = best - 1; C >= start_c; --C) {
        if (!run_bs(spec, C, phase2).success) break;
        best = C;
    }
    return best;
}

TuneGrid tune_grid(const ProblemSpec& spec, std::uint64_t seed, int jobs) {
    TuneGrid grid;
    grid.instance_name = spec.instance->name();
    grid.m = spec.m;

#ifdef _OPENMP
    if (jobs != 1) {
        const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) collapse(2) num_threads(threads)
        for (int i = 0; i < kGridSize; ++i)
            for (int j = 0; j < kGridSize; ++j)
                grid.values[i][j] =
                    tune_cell(spec, {grid_value(i), grid_value(j)}, seed);
        return grid;
    }
#else
    (void)jobs;
#endif
    for (int i = 0; i < kGridSize; ++i)
        for (int j = 0; j < kGridSize; ++j)
            grid.values[i][j] = tune_cell(spec, {grid_value(i), grid_value(j)}, seed);
    return grid;
}

std::string render_heatmap_pgm(const TuneGrid& grid) {
    const int best = grid.best_cell().value;
    const int worst = grid.worst_cell().value;
    std::ostringstream os;
    os << "P2\n" << kGridSize << " " << kGridSize << "\n255\n";
    for (int i = 0; i < kGridSize; ++i) {
        for (int j = 0; j < kGridSize; ++j) {
            int gray = 255;
            if (worst != best)
                gray = static_cast<int>(std::lround(
                    255.0 * (worst - grid.values[i][j]) / (worst - best)));
            os << gray << (j + 1 < kGridSize ? " " : "\n");
        }
    }
    return os.str();
}

std::string render_heatmap_csv(const TuneGrid& grid) {
    std::ostringstream os;
    os << "kappa1\\kappa2";
    for (int j = 0; j < kGridSize; ++j) os << "," << format_kappa(grid_value(j));
    os << "\n";
    for (int i = 0; i < kGridSize; ++i) {
        os << format_kappa(grid_value(i));
        for (int j = 0; j < kGridSize; ++j) os << "," << grid.values[i][j];
        os << "\n";
    }
    return os.str();
}

TuneGrid parse_grid_csv(const std::string& csv) {
    TuneGrid grid;
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty grid CSV");
    for (int i = 0; i < kGridSize; ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("grid CSV: missing row " + std::to_string(i + 1));
        std::istringstream row(line);
        std::string field;
        if (!std::getline(row, field, ','))
            throw std::runtime_error("grid CSV: bad row " + std::to_string(i + 1));
        for (int j = 0; j < kGridSize; ++j) {
            if (!std::getline(row, field, ','))
                throw std::runtime_error("grid CSV: short row " + std::to_string(i + 1));
            grid.values[i][j] = std::stoi(field);
        }
    }
    return grid;
}

}  // namespace salbp
