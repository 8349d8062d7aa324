#ifndef SALBP_IO_UTIL_HPP
#define SALBP_IO_UTIL_HPP

#include <optional>
#include <string>

#include "salbp/greedy.hpp"

namespace salbp {

/// Write `content` to `path` via a temp file plus rename, so interrupted
/// runs never leave truncated output behind.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// Lookup in a "graph kappa1 kappa2" table (one row per precedence graph).
/// Matching is case-insensitive on the instance name's leading characters,
/// so e.g. instance "BUXEY" matches row "Buxey".
std::optional<GreedyWeights> lookup_kappa(const std::string& table_text,
                                          const std::string& instance_name);

/// Built-in copy of the default per-graph weight table; identical to the
/// shipped data/kappa_defaults.txt.
const std::string& default_kappa_table();

}  // namespace salbp

#endif
