#ifndef SALBP_SOLUTION_HPP
#define SALBP_SOLUTION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "salbp/instance.hpp"

namespace salbp {

/// A complete assignment: ordered list of m work stations, each a set of task
/// ids (stored sorted ascending). Trailing stations may be empty. Value
/// object; freely copyable.
struct Solution {
    std::string instance_name;
    int m = 0;
    std::vector<std::vector<int>> stations;
};

/// One violated validity condition, with enough context to locate it.
struct Violation {
    enum class Kind { NotAssigned, MultiplyAssigned, UnknownTask, Precedence, Capacity, WrongStationCount };
    Kind kind;
    int task = 0;     // offending task id (0 when not applicable)
    int station = 0;  // offending station index, 1-based (0 when not applicable)
    std::string message;
};

/// Checks partition, precedence and per-station load <= C. Collects all
/// violations rather than stopping at the first.
std::vector<Violation> validate_solution(const ProblemSpec& spec, const Solution& sol, int C);

/// Max over stations of the station load.
int cycle_time(const Solution& sol, const Instance& instance);

/// Station-order reversal: maps a solution of the reverse instance back to
/// the original instance (and vice versa). Cycle time is unchanged.
Solution reverse_solution(const Solution& sol);

/// Text form: header "name m C", then one line per station with ascending
/// task ids (empty line for an empty station).
std::string serialize_solution(const Solution& sol, int C);
Solution parse_solution(std::istream& in);
Solution parse_solution_text(const std::string& text);

}  // namespace salbp

#endif
