#include "salbp/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace salbp {

std::vector<double> gamma_values(const Instance& instance, int C, const GreedyWeights& w) {
    const int n = instance.n();
    const int max_succ = instance.max_succ_all();
    std::vector<double> gamma(n);
    for (int i = 1; i <= n; ++i) {
        double succ_term =
            max_succ > 0
                ? static_cast<double>(instance.succ_all(i).size()) / max_succ
                : 0.0;
        gamma[i - 1] = w.kappa1 * (static_cast<double>(instance.time(i)) / C) +
                       w.kappa2 * succ_term;
    }
    return gamma;
}

std::vector<double> eta_values(const std::vector<double>& gamma) {
    auto [mn, mx] = std::minmax_element(gamma.begin(), gamma.end());
    const double gamma_min = *mn;
    // A non-positive gamma_max would zero out or flip the ordering of
    // gamma - gamma_min + 1; divide by 1 instead.
    const double denom = *mx > 0.0 ? *mx : 1.0;
    std::vector<double> eta(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i)
        eta[i] = (gamma[i] - gamma_min + 1.0) / denom;
    return eta;
}

GreedyTable make_greedy_table(const Instance& instance, int C, const GreedyWeights& w) {
    GreedyTable table;
    table.gamma = gamma_values(instance, C, w);
    auto [mn, mx] = std::minmax_element(table.gamma.begin(), table.gamma.end());
    table.gamma_min = *mn;
    table.gamma_max = *mx;
    table.eta = eta_values(table.gamma);
    return table;
}

int choose_task(std::span<const int> avail, std::span<const int> sat,
                const GreedyTable& table, double det_rate, std::mt19937_64& rng) {
    if (avail.empty()) throw std::invalid_argument("choose_task: empty available set");
    if (avail.size() == 1) return avail[0];

    const bool deterministic =
        det_rate >= 1.0 ||
        (det_rate > 0.0 && std::uniform_real_distribution<double>(0.0, 1.0)(rng) < det_rate);

    if (deterministic) {
        std::span<const int> pool = sat.empty() ? avail : sat;
        int best = pool[0];
        for (int task : pool.subspan(1)) {
            if (table.eta[task - 1] > table.eta[best - 1] ||
                (table.eta[task - 1] == table.eta[best - 1] && task < best))
                best = task;
        }
        return best;
    }

    double total = 0.0;
    for (int task : avail) total += table.eta[task - 1];
    double draw = std::uniform_real_distribution<double>(0.0, total)(rng);
    for (int task : avail) {
        draw -= table.eta[task - 1];
        if (draw <= 0.0) return task;
    }
    return avail.back();  // rounding fallthrough
}

}  // namespace salbp
