#pragma once

#include <cstddef>
#include <vector>

#include "satnum/graph.hpp"

// Named graph families. Labelings are part of the contract: tests and
// figure reproductions depend on them.
namespace satnum::gen {

/// n isolated vertices.
Graph empty(std::size_t n);

/// Path 0-1-...-(n-1) on n vertices.
Graph path(std::size_t n);

/// Cycle 0-1-...-(n-1)-0; n >= 3.
Graph cycle(std::size_t n);

/// K_{1,k}: center 0, leaves 1..k.
Graph star(std::size_t k);

/// K_n.
Graph clique(std::size_t n);

/// Complete multipartite graph; parts occupy consecutive index blocks in
/// the given order. Zero-sized parts are rejected.
Graph complete_multipartite(const std::vector<std::size_t>& part_sizes);

/// Circulant graph: i ~ i +- d (mod n) for every offset d in [1, n/2].
Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets);

/// r-regular bipartite graph with left side 0..a-1 and right side a..a+b-1.
/// Left i joins right (i + j) mod a for j in [0, r). Requires a == b >= r.
Graph regular_bipartite(std::size_t a, std::size_t b, std::size_t r);

}  // namespace satnum::gen
