#ifndef SALBP_BEAM_SEARCH_HPP
#define SALBP_BEAM_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "salbp/greedy.hpp"
#include "salbp/instance.hpp"
#include "salbp/solution.hpp"

namespace salbp {

/// Prefix of a solution: the first `filled()` stations plus bookkeeping for
/// fast eligibility checks during extension.
struct PartialSolution {
    std::vector<std::vector<int>> stations;
    std::vector<char> assigned;       // size n, 1 if task id-1 assigned
    std::vector<int> pending_preds;   // unassigned direct-predecessor count
    long long assigned_time = 0;
    int assigned_count = 0;

    static PartialSolution empty(const Instance& instance);
    int filled() const { return static_cast<int>(stations.size()); }
    bool is_assigned(int task) const { return assigned[task - 1] != 0; }
};

struct BsParams {
    int k_bw = 5;    // beam width
    int k_ext = 2;   // max extensions per beam entry per step
    double det_rate = 0.5;
    bool early_exit = true;  // return on the first complete solution
    // Widen the duplicate filter to every station generated in the step,
    // including those of complete or depth-capped extensions, instead of only
    // stations stored in B_ext.
    bool dup_check_generated = false;
};

struct BsStats {
    long long extensions_generated = 0;
    int beams_processed = 0;
};

struct BsOutcome {
    bool success = false;
    std::optional<Solution> solution;
    BsStats stats;
};

/// Fills work station l of `partial` in place: iteratively assigns available
/// tasks (unassigned, predecessors assigned, fits the remaining capacity)
/// chosen by choose_task, until nothing fits. Returns the filled station,
/// which may be empty when no task is eligible.
std::vector<int> extend_partial_solution(PartialSolution& partial, const Instance& instance,
                                         int l, int C, const GreedyTable& greedy,
                                         const BsParams& params, std::mt19937_64& rng);

/// ceil(sum of unassigned times / C); 0 iff complete.
int lower_bound(const PartialSolution& partial, const Instance& instance, int C);

/// Stable sort by ascending lower bound, truncate to k_bw.
std::vector<PartialSolution> select_solutions(std::vector<PartialSolution> ext, int k_bw,
                                              const Instance& instance, int C);

/// Beam search for the fixed-cycle-time feasibility problem: succeeds iff a
/// solution with at most m stations and per-station load <= C is found.
/// Solutions using fewer than m stations are padded with empty stations.
BsOutcome beam_search(const ProblemSpec& spec, int C, const BsParams& params,
                      const GreedyWeights& weights, std::mt19937_64& rng);

}  // namespace salbp

#endif
