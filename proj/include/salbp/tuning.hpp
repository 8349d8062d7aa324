#ifndef SALBP_TUNING_HPP
#define SALBP_TUNING_HPP

#include <array>
#include <cstdint>
#include <string>

#include "salbp/greedy.hpp"
#include "salbp/instance.hpp"

namespace salbp {

inline constexpr int kGridSize = 21;  // kappa in {-1.0, -0.9, ..., 1.0}

inline double grid_value(int index) { return (index - 10) / 10.0; }

/// Cycle-time results of the 441-cell (kappa1, kappa2) sweep. Rows are
/// indexed by kappa1, columns by kappa2.
struct TuneGrid {
    std::string instance_name;
    int m = 0;
    std::array<std::array<int, kGridSize>, kGridSize> values{};

    struct Cell {
        double kappa1, kappa2;
        int value;
    };
    Cell best_cell() const;
    Cell worst_cell() const;
};

/// Evaluate one grid cell: the tuning variant of the iterative scheme, with
/// all choices deterministic and phase 2 replaced by a single beam search
/// (k_bw=150, k_ext=20) per cycle time that stops at the first failure.
int tune_cell(const ProblemSpec& spec, const GreedyWeights& weights, std::uint64_t seed);

/// Full 21x21 sweep. jobs: 0 = all hardware threads (OpenMP), 1 = serial
/// reference path, otherwise that many threads. Cells are independent and
/// deterministic, so the parallel and serial paths produce identical grids.
TuneGrid tune_grid(const ProblemSpec& spec, std::uint64_t seed = 0, int jobs = 0);

/// ASCII PGM (P2, 21x21, maxval 255): lighter cells are better settings;
/// gray = round(255 * (worst - value) / (worst - best)), all 255 when the
/// grid is uniform. Rows run kappa1 = -1.0 (top) to 1.0 (bottom).
std::string render_heatmap_pgm(const TuneGrid& grid);

/// CSV with a kappa2 header row and kappa1 header column (one decimal each);
/// cells are integer cycle times.
std::string render_heatmap_csv(const TuneGrid& grid);

/// Inverse of render_heatmap_csv.
TuneGrid parse_grid_csv(const std::string& csv);

}  // namespace salbp

#endif
