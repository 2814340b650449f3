#include "satnum/graph.hpp"

#include <algorithm>
#include <limits>

namespace satnum {

Graph::Graph(std::size_t order)
    : order_(order),
      words_(bits::words_for(order)),
      bits_(order * bits::words_for(order), 0),
      degree_(order, 0) {
  if (order > std::numeric_limits<Vertex>::max()) throw GraphError("order too large");
}

Graph Graph::from_edge_list(std::size_t order, const EdgeList& edges) {
  Graph g(order);
  for (const auto& e : edges) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u >= order || e.v >= order) {
      throw GraphError("endpoint out of range in edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    if (g.has_edge(e.u, e.v)) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    g.insert_edge(e.u, e.v);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(order_));
  }
}

std::span<std::uint64_t> Graph::mutable_row(Vertex v) {
  return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return bits::test(row(u), v);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[v];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  bits::for_each(row(v), [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<std::size_t> Graph::degrees() const { return {degree_.begin(), degree_.end()}; }

std::size_t Graph::max_degree() const noexcept {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::size_t Graph::min_degree() const noexcept {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(size_);
  for (Vertex u = 0; u < order_; ++u) {
    bits::for_each(row(u), [&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

void Graph::insert_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  if (bits::test(row(u), v)) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
  }
  bits::set(mutable_row(u), v);
  bits::set(mutable_row(v), u);
  ++degree_[u];
  ++degree_[v];
  ++size_;
}

void Graph::erase_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !bits::test(row(u), v)) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  }
  bits::reset(mutable_row(u), v);
  bits::reset(mutable_row(v), u);
  --degree_[u];
  --degree_[v];
  --size_;
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  Graph out = g;
  out.insert_edge(u, v);
  return out;
}

std::vector<Vertex> edge_neighborhood(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  std::vector<Vertex> out;
  const auto ru = g.row(u);
  const auto rv = g.row(v);
  for (std::size_t w = 0; w < ru.size(); ++w) {
    std::uint64_t word = ru[w] | rv[w];
    while (word != 0) {
      const auto x = static_cast<Vertex>(w * bits::kWordBits +
                                         static_cast<std::size_t>(std::countr_zero(word)));
      if (x != u && x != v) out.push_back(x);
      word &= word - 1;
    }
  }
  return out;
}

EdgeList non_edges(const Graph& g) {
  EdgeList out;
  const std::size_t n = g.order();
  out.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.size());
  for (Vertex u = 0; u < n; ++u) {
    const auto ru = g.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (!bits::test(ru, v)) out.push_back({u, v});
    }
  }
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto ru = g.row(u);
    bool found = false;
    bits::for_each(ru, [&](Vertex v) {
      if (found || v < u) return;
      const auto rv = g.row(v);
      for (std::size_t w = 0; w < ru.size(); ++w) {
        if ((ru[w] & rv[w]) != 0) {
          found = true;
          return;
        }
      }
    });
    if (found) return false;
  }
  return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("permutation length differs from graph order");
  std::vector<bool> seen(g.order(), false);
  for (auto p : perm) {
    if (p >= g.order() || seen[p]) throw GraphError("relabeling is not a permutation");
    seen[p] = true;
  }
  Graph out(g.order());
  for (const auto& e : g.edges()) out.insert_edge(perm[e.u], perm[e.v]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const auto& e : a.edges()) out.insert_edge(e.u, e.v);
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& e : b.edges()) out.insert_edge(e.u + shift, e.v + shift);
  return out;
}

}  // namespace satnum
