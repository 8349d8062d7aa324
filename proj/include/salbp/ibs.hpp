#ifndef SALBP_IBS_HPP
#define SALBP_IBS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "salbp/beam_search.hpp"

namespace salbp {

/// Parameters of the high-performance variant: per beam search application
/// the beam width and extension count are drawn uniformly from the given
/// ranges, and with probability random_weight_prob the greedy weights are
/// drawn uniformly from [-1,1] instead of the configured ones.
struct HpParams {
    double time_limit = 1800.0;
    double small_fraction = 0.01;
    int k_bw_min = 150, k_bw_max = 250;
    int k_ext_min = 20, k_ext_max = 40;
    double random_weight_prob = 0.5;
};

struct IbsConfig {
    double time_limit_per_c = 180.0;  // seconds of wall clock per cycle time
    BsParams phase1_params{5, 2};
    BsParams small_params{10, 5};
    BsParams large_params{150, 20};
    double small_fraction = 0.05;
    GreedyWeights weights{0.0, 1.0};
    double det_rate = 0.5;
    std::uint64_t seed = 1;
    bool hp_mode = false;
    HpParams hp;
    bool strict_search = false;  // literal loop: no early exit on completion
    std::ostream* verbose_log = nullptr;
};

struct PerCycleLog {
    int C;
    int attempts;  // beam search applications at this cycle time
    bool success;
    long long elapsed_ms;
};

struct IbsResult {
    int best_cycle_time = 0;
    Solution best_solution;
    double time_to_best = 0.0;  // seconds into the run
    std::vector<PerCycleLog> per_c_log;
};

/// Two-phase iterative scheme. Phase 1 walks the cycle time up from the
/// starting bound until beam search (alternating original and reverse
/// instance) succeeds. Phase 2 walks it down, spending up to
/// time_limit_per_c per cycle time, and reports the last feasible one.
IbsResult run_ibs(const ProblemSpec& spec, const IbsConfig& config);

/// run_ibs with the high-performance settings forced on.
IbsResult run_ibs_hp(const ProblemSpec& spec, const IbsConfig& config);

}  // namespace salbp

#endif
