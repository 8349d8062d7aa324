#ifndef SALBP_GREEDY_HPP
#define SALBP_GREEDY_HPP

#include <random>
#include <span>
#include <vector>

#include "salbp/instance.hpp"

namespace salbp {

/// Weights of the two greedy heuristics: kappa1 scales the processing-time
/// term, kappa2 the successor-count term. Both in [-1, 1].
struct GreedyWeights {
    double kappa1 = 0.0;
    double kappa2 = 1.0;
};

/// Per-task greedy values for one (instance, C, weights) triple. Immutable
/// once built.
struct GreedyTable {
    std::vector<double> gamma;
    std::vector<double> eta;  // strictly positive
    double gamma_min = 0.0;
    double gamma_max = 0.0;
};

/// gamma_i = kappa1 * t_i / C + kappa2 * |Suc^all_i| / max_j |Suc^all_j|.
/// The successor term is 0 when the instance has no arcs.
std::vector<double> gamma_values(const Instance& instance, int C, const GreedyWeights& w);

/// eta_i = (gamma_i - gamma_min + 1) / gamma_max, with the denominator
/// replaced by 1 whenever gamma_max <= 0 so that positivity and the ordering
/// of the numerator are preserved.
std::vector<double> eta_values(const std::vector<double>& gamma);

GreedyTable make_greedy_table(const Instance& instance, int C, const GreedyWeights& w);

/// Task-choice rule. With probability det_rate the choice is deterministic:
/// argmax of eta over `sat` when nonempty, else over `avail` (lowest id wins
/// ties). Otherwise a task is sampled from avail with probability
/// eta_i / sum_{j in avail} eta_j; the saturation set plays no role in the
/// probabilistic branch.
int choose_task(std::span<const int> avail, std::span<const int> sat,
                const GreedyTable& table, double det_rate, std::mt19937_64& rng);

}  // namespace salbp

#endif
