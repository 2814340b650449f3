#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum {

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SatOptions {
  /// Give up (OracleError) when no saturated graph has at most this many edges.
  std::optional<std::size_t> edge_cap;
  /// Start the sweep at zero edges instead of at the best lower bound.
  bool audit{false};
  /// Workers for testing the classes of one edge count; 0 = hardware concurrency.
  unsigned threads{1};
};

struct SatResult {
  std::size_t n{0};
  Graph pattern;
  std::size_t sat_value{0};
  std::vector<Graph> witnesses;   // every minimum class, canonical representatives
  std::uint64_t graphs_examined{0};
  std::size_t start_edges{0};     // first edge count tested
};

/// Exact sat(n, H) for n <= 9 by testing every isomorphism class in
/// ascending edge count.
SatResult brute_force_sat(std::size_t n, const Graph& h, const SatOptions& options = {});

struct BoundAuditEntry {
  std::size_t pattern_index{0};
  std::size_t n{0};
  std::size_t sat_value{0};
  std::optional<std::int64_t> best_lower;        // absent when the pattern is outside the bound machinery
  std::vector<std::pair<std::string, std::uint64_t>> construction_sizes;
};

struct BoundAudit {
  std::vector<BoundAuditEntry> entries;
  std::vector<std::string> violations;
};

/// For each pattern and every n from its order to n_max: the best lower
/// bound must not exceed sat(n, H), and every applicable construction must
/// not have fewer edges. The oracle runs in audit mode.
BoundAudit audit_bounds_against_oracle(const std::vector<Graph>& corpus, std::size_t n_max,
                                       unsigned threads = 1);

}  // namespace satnum
