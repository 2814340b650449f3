#include "satnum/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <vector>

#include "satnum/io.hpp"

namespace satnum {
namespace {

using Mask = std::uint16_t;
using Cells = std::vector<Mask>;

struct Canonizer {
  std::size_t n{0};
  std::array<Mask, kMaxCanonicalOrder> adj{};
  std::uint64_t best{std::numeric_limits<std::uint64_t>::max()};

  static Mask bit(std::size_t v) { return static_cast<Mask>(1U << v); }

  // Splits cells by neighbor counts into every cell until stable. Split
  // pieces keep the order of their count vectors, so the result only
  // depends on the isomorphism type of the (graph, partition) pair.
  void refine(Cells& cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
        if (std::popcount(cells[c]) == 1) continue;
        std::vector<std::pair<std::vector<int>, std::size_t>> members;
        for (std::size_t v = 0; v < n; ++v) {
          if (!(cells[c] & bit(v))) continue;
          std::vector<int> signature(cells.size());
          for (std::size_t k = 0; k < cells.size(); ++k) {
            signature[k] = std::popcount(static_cast<Mask>(adj[v] & cells[k]));
          }
          members.emplace_back(std::move(signature), v);
        }
        std::sort(members.begin(), members.end());
        if (members.front().first == members.back().first) continue;
        Cells pieces;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (i == 0 || members[i].first != members[i - 1].first) pieces.push_back(0);
          pieces.back() |= bit(members[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }

  std::uint64_t code(const Cells& cells) const {
    std::array<std::size_t, kMaxCanonicalOrder> order{};
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::size_t>(std::countr_zero(cells[i]));
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) value = (value << 1) | ((adj[order[i]] >> order[j]) & 1U);
    }
    return value;
  }

  void search(Cells cells) {
    refine(cells);
    const auto target = std::find_if(cells.begin(), cells.end(),
                                      [](Mask c) { return std::popcount(c) > 1; });
    if (target == cells.end()) {
      best = std::min(best, code(cells));
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    const Mask cell = *target;
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(cell & bit(v))) continue;
      // Vertices with equal neighborhoods (ignoring each other) are swapped
      // by an automorphism fixing the partition; one branch covers both.
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](std::size_t a) {
        return (adj[a] & ~bit(v)) == (adj[v] & ~bit(a));
      });
      if (twin) continue;
      tried.push_back(v);
      Cells next = cells;
      next[index] = bit(v);
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(index) + 1, static_cast<Mask>(cell & ~bit(v)));
      search(std::move(next));
    }
  }
};

}  // namespace

Graph CanonicalForm::to_graph() const {
  Graph g(order);
  std::size_t k = order * (order - (order > 0 ? 1 : 0)) / 2;
  for (Vertex i = 0; i < order; ++i) {
    for (Vertex j = i + 1; j < order; ++j) {
      --k;
      if ((bits >> k) & 1U) g.insert_edge(i, j);
    }
  }
  return g;
}

std::string CanonicalForm::bytes() const { return io::emit_graph6(to_graph()); }

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("canonical form supports order <= " + std::to_string(kMaxCanonicalOrder));
  }
  Canonizer c;
  c.n = g.order();
  for (Vertex v = 0; v < c.n; ++v) c.adj[v] = static_cast<Mask>(g.row(v).empty() ? 0 : g.row(v)[0]);
  if (c.n == 0) return {};
  // Initial cells: vertices grouped by ascending degree.
  Cells cells;
  for (std::size_t d = 0; d < c.n; ++d) {
    Mask cell = 0;
    for (Vertex v = 0; v < c.n; ++v) {
      if (g.degree(v) == d) cell |= Canonizer::bit(v);
    }
    if (cell) cells.push_back(cell);
  }
  c.search(std::move(cells));
  return {static_cast<std::uint8_t>(c.n), c.best};
}

}  // namespace satnum
