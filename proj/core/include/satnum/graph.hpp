#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace satnum {

/// Dense 0-based vertex index.
using Vertex = std::uint32_t;

/// Unordered vertex pair. Normalized pairs keep u < v.
struct Edge {
  Vertex u{0};
  Vertex v{0};

  constexpr Edge normalized() const noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Raised for malformed graph input and violated graph preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace bits {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) noexcept { return (n + kWordBits - 1) / kWordBits; }

inline std::size_t popcount(std::span<const std::uint64_t> row) noexcept {
  std::size_t total = 0;
  for (auto w : row) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

inline bool test(std::span<const std::uint64_t> row, std::size_t i) noexcept {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<std::uint64_t> row, std::size_t i) noexcept {
  row[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

inline void reset(std::span<std::uint64_t> row, std::size_t i) noexcept {
  row[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

/// Calls fn(index) for every set bit, ascending.
template <typename Fn>
void for_each(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t word = row[w];
    while (word != 0) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(word));
      fn(static_cast<Vertex>(w * kWordBits + bit));
      word &= word - 1;
    }
  }
}

}  // namespace bits

/// Finite simple undirected graph on vertices 0..order-1.
///
/// Adjacency is one bit row per vertex so neighborhood intersections are
/// word-parallel. Values are cheap to copy for the orders this library
/// targets (a few thousand vertices at most).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Builds a graph with exactly the given edges.
  /// Throws GraphError on loops, out-of-range endpoints, or duplicates.
  static Graph from_edge_list(std::size_t order, const EdgeList& edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;

  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;

  /// All edges as normalized pairs in ascending lexicographic order.
  EdgeList edges() const;

  /// In-place mutation for builders. Throws GraphError on loops,
  /// out-of-range endpoints, duplicate insertion or missing erasure.
  void insert_edge(Vertex u, Vertex v);
  void erase_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(Vertex v) const;
  std::span<std::uint64_t> mutable_row(Vertex v);

  std::size_t order_{0};
  std::size_t words_{0};
  std::size_t size_{0};
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degree_;
};

/// Returns g plus the edge uv; g is left untouched.
Graph add_edge(const Graph& g, Vertex u, Vertex v);

/// Vertices other than u and v adjacent to u or v, ascending.
/// Throws GraphError when uv is not an edge.
std::vector<Vertex> edge_neighborhood(const Graph& g, Vertex u, Vertex v);

/// Every non-adjacent pair u < v in ascending order.
EdgeList non_edges(const Graph& g);

bool is_triangle_free(const Graph& g);

/// True when the listed vertices are pairwise adjacent (vacuous for |set| <= 1).
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// True when no two listed vertices are adjacent.
bool is_independent(const Graph& g, std::span<const Vertex> vertices);

/// Vertex v of g becomes perm[v] in the result; perm must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace satnum
