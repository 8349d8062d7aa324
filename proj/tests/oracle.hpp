// Test-only oracles: independent of the solver implementation path.
#ifndef SALBP_TESTS_ORACLE_HPP
#define SALBP_TESTS_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "salbp/instance.hpp"
#include "salbp/solution.hpp"

namespace salbp::oracle {

/// All-pairs reachability by Floyd-Warshall over the adjacency matrix.
/// reach[i][j] == true iff a directed path i -> j exists (i, j 1-based).
std::vector<std::vector<bool>> reachability(const Instance& instance);

/// Exhaustive feasibility check: is there a valid assignment to at most m
/// stations with every station load <= C? Backtracking over station fills;
/// intended for n <= 12.
bool feasible(const Instance& instance, int m, int C);

/// Exact optimal cycle time by walking C up from the trivial lower bound
/// until `feasible` accepts. Intended for n <= 9.
int brute_force_optimum(const Instance& instance, int m);

/// Random DAG instance: arcs only from lower to higher task id, each pair
/// kept with probability arc_prob; times uniform in [t_min, t_max].
Instance random_instance(int n, double arc_prob, int t_min, int t_max,
                         std::mt19937_64& rng, const std::string& name = "random");

/// Valid solution built by chunking a random topological order into m
/// consecutive pieces (some possibly empty).
Solution random_topological_solution(const Instance& instance, int m, std::mt19937_64& rng);

}  // namespace salbp::oracle

#endif
