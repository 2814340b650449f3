#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satnum/graph.hpp"

namespace satnum {

/// Injective map from pattern vertices to host vertices sending every
/// pattern edge to a host edge (subgraph, not induced).
struct Embedding {
  std::vector<Vertex> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Forces pattern_edge.u -> host_pair.u and pattern_edge.v -> host_pair.v.
struct Anchor {
  Edge pattern_edge;
  Edge host_pair;
};

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// Exact subgraph-monomorphism search with a pattern-specific plan.
///
/// Vertices of degree >= 2 (and degree-1 vertices whose neighbor is also
/// a leaf) form the core, searched by backtracking in a connected,
/// most-constrained-first order. Pendant leaves and isolated pattern
/// vertices are placed afterwards by bipartite matching, which is exact
/// once the core is fixed.
class EmbeddingSearch {
 public:
  explicit EmbeddingSearch(Graph pattern);

  const Graph& pattern() const noexcept { return pattern_; }

  std::optional<Embedding> find(const Graph& host) const;
  std::optional<Embedding> find(const Graph& host, const Anchor& anchor) const;

  /// Number of backtracking nodes visited by the last search on this
  /// thread; a rough cost measure for benchmarks.
  static std::uint64_t last_node_count() noexcept;

 private:
  struct Plan {
    std::vector<Vertex> order;                    // core vertices in search order
    std::vector<std::vector<std::size_t>> back;   // earlier-ordered neighbor positions
    std::vector<Vertex> deferred;                 // pendant leaves and isolated vertices
    std::vector<std::optional<Vertex>> parent;    // parent of each deferred vertex
  };

  Plan make_plan(std::optional<Edge> anchor) const;
  const Plan& plan_for(Edge anchor_edge) const;
  std::optional<Embedding> run(const Plan& plan, const Graph& host,
                               std::optional<Edge> host_pair) const;

  Graph pattern_;
  std::vector<bool> pendant_;
  Plan free_plan_;
  std::vector<Plan> anchored_plans_;  // indexed by oriented pattern edge
  std::vector<std::vector<std::size_t>> edge_index_;
};

/// One-shot convenience over EmbeddingSearch.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern,
                                        const std::optional<Anchor>& anchor = std::nullopt);

/// Isomorphism test built on the monomorphism search (equal order and
/// size make a monomorphism an isomorphism).
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace satnum
