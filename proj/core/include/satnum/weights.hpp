#pragma once

#include <optional>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum {

/// Raised when a pattern is outside the domain of the weight machinery
/// (no edges, or an isolated edge).
class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeWeights {
  Edge edge;
  unsigned wt_cp{0};
  unsigned wt0{0};
  std::optional<unsigned> wt1;  // absent iff the edge is isolated
};

/// Edge weights of a pattern H and the four constants derived from them.
///
///   k0  = min wt0            k0p = min wt0 over edges with wt1 == k1
///   k1  = min wt1            k1p = min wt1 over edges with wt0 == k0
///
/// Witness edges are the lexicographically least minimizers.
struct WeightSummary {
  unsigned k0{0};
  unsigned k1{0};
  unsigned k0p{0};
  unsigned k1p{0};
  unsigned min_wt_cp{0};
  std::vector<EdgeWeights> per_edge;

  struct Witnesses {
    Edge k0, k1, k0p, k1p, min_wt_cp;
  } witnesses;
};

/// Cameron-Puleo weight 2|N(u) & N(v)| + |N(v) - N(u)| - 1 with d(u) <= d(v).
unsigned wt_cp(const Graph& h, Edge e);

/// max(d(u), d(v)) - 1.
unsigned wt0(const Graph& h, Edge e);

/// Largest degree in the edge neighborhood; nullopt for an isolated edge.
std::optional<unsigned> wt1(const Graph& h, Edge e);

EdgeWeights edge_weights(const Graph& h, Edge e);

bool has_isolated_edge(const Graph& h);

/// Throws PatternError for an edgeless pattern or one with an isolated edge.
WeightSummary weight_summary(const Graph& h);

}  // namespace satnum
