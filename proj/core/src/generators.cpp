#include "satnum/generators.hpp"

#include <numeric>
#include <string>

namespace satnum::gen {

Graph empty(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.insert_edge(v - 1, v);
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle requires at least 3 vertices");
  Graph g = path(n);
  g.insert_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

Graph star(std::size_t k) {
  Graph g(k + 1);
  for (Vertex v = 1; v <= k; ++v) g.insert_edge(0, v);
  return g;
}

Graph clique(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.insert_edge(u, v);
  }
  return g;
}

Graph complete_multipartite(const std::vector<std::size_t>& part_sizes) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] == 0) throw GraphError("complete_multipartite: empty part");
    part_of.insert(part_of.end(), part_sizes[p], p);
  }
  Graph g(part_of.size());
  for (Vertex u = 0; u < part_of.size(); ++u) {
    for (Vertex v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) g.insert_edge(u, v);
    }
  }
  return g;
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets) {
  Graph g(n);
  for (auto d : offsets) {
    if (d == 0 || 2 * d > n) {
      throw GraphError("circulant offset " + std::to_string(d) + " outside [1, n/2]");
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    for (auto d : offsets) {
      const auto j = static_cast<Vertex>((i + d) % n);
      if (!g.has_edge(i, j)) g.insert_edge(i, j);
    }
  }
  return g;
}

Graph regular_bipartite(std::size_t a, std::size_t b, std::size_t r) {
  if (a != b) throw GraphError("regular_bipartite requires equal sides");
  if (r > a) throw GraphError("regular_bipartite degree exceeds side size");
  Graph g(a + b);
  for (Vertex i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      g.insert_edge(i, static_cast<Vertex>(a + (i + j) % a));
    }
  }
  return g;
}

}  // namespace satnum::gen
