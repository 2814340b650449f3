#pragma once

#include <cstddef>
#include <vector>

#include "satnum/canonical.hpp"
#include "satnum/graph.hpp"

namespace satnum {

/// Walks the isomorphism classes of graphs on n <= 9 vertices level by
/// level in the number of edges. Level m+1 is produced by adding every
/// non-edge to every class of level m and keeping one representative per
/// canonical form, so each level holds exactly the classes of that size.
class EdgeLevelEnumerator {
 public:
  explicit EdgeLevelEnumerator(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t edges() const noexcept { return edges_; }

  /// Classes with edges() edges, sorted by canonical form.
  const std::vector<CanonicalForm>& level() const noexcept { return level_; }

  /// Moves to the next edge count; false once the complete graph is passed.
  bool advance();

 private:
  std::size_t n_;
  std::size_t edges_{0};
  std::vector<CanonicalForm> level_;
};

/// One canonical representative per isomorphism class with the given
/// order and size, in canonical-form order.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t edge_count);

}  // namespace satnum
