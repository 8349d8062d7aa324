#ifndef SALBP_INSTANCE_HPP
#define SALBP_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace salbp {

/// Parse/validation failure for instance files. `line` is 1-based and 0 when
/// the error is not tied to a specific line.
struct ParseError : std::runtime_error {
    enum class Kind { SyntaxError, NonPositiveTime, BadArcEndpoint, CycleDetected };

    ParseError(Kind k, int line, const std::string& what);

    Kind kind;
    int line;
};

/// An assembly line balancing instance: n tasks with positive integer
/// processing times and a precedence DAG. Immutable after construction;
/// safe to share read-only across concurrent solver runs.
///
/// Task ids are 1-based. Derived quantities (full transitive predecessor and
/// successor sets) are computed on construction.
class Instance {
public:
    Instance(std::string name, std::vector<int> times,
             std::vector<std::pair<int, int>> arcs);

    const std::string& name() const { return name_; }
    int n() const { return static_cast<int>(times_.size()); }
    int time(int task) const { return times_[task - 1]; }
    const std::vector<int>& times() const { return times_; }
    long long total_time() const { return total_time_; }
    int max_time() const { return max_time_; }

    /// Arcs sorted ascending by (i, j).
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    /// Direct predecessors/successors of a task, sorted ascending.
    const std::vector<int>& direct_pred(int task) const { return direct_pred_[task - 1]; }
    const std::vector<int>& direct_succ(int task) const { return direct_succ_[task - 1]; }

    /// Full transitive predecessor set P_j, sorted ascending.
    const std::vector<int>& pred_set(int task) const { return pred_sets_[task - 1]; }
    /// All tasks reachable from `task` via a directed path, sorted ascending.
    const std::vector<int>& succ_all(int task) const { return succ_all_[task - 1]; }
    int max_succ_all() const { return max_succ_all_; }

    bool operator==(const Instance& other) const {
        return name_ == other.name_ && times_ == other.times_ && arcs_ == other.arcs_;
    }

private:
    std::string name_;
    std::vector<int> times_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> direct_pred_;
    std::vector<std::vector<int>> direct_succ_;
    std::vector<std::vector<int>> pred_sets_;
    std::vector<std::vector<int>> succ_all_;
    int max_succ_all_ = 0;
    int max_time_ = 0;
    long long total_time_ = 0;
};

/// Instance plus the fixed number of work stations.
struct ProblemSpec {
    const Instance* instance;
    int m;
};

/// Strict parser for the precedence-graph benchmark format:
/// line 1: n; lines 2..n+1: task times; then one "i,j" arc per line;
/// terminator "-1,-1". Trailing whitespace and CRLF are tolerated.
Instance parse_instance(std::istream& in, const std::string& name);
Instance parse_instance_text(const std::string& text, const std::string& name);
Instance load_instance_file(const std::string& path);

/// Serialize back to the benchmark format (arcs in ascending order).
std::string serialize_instance(const Instance& instance);

/// The instance with all precedence arcs inverted. Involution on the arc set.
Instance reverse_instance(const Instance& instance);

/// max{max_i t_i, ceil(sum_i t_i / m)}; a valid lower bound on the optimal
/// cycle time.
int starting_cycle_time(const ProblemSpec& spec);

/// Emit the integer programming model as LP-file text: binary x_{i,s},
/// continuous z, assignment/precedence/capacity constraints. Output is
/// byte-identical across runs.
std::string export_ip_model(const ProblemSpec& spec);

}  // namespace salbp

#endif
