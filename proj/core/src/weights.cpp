#include "satnum/weights.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace satnum {
namespace {

void require_edge(const Graph& h, Edge e) {
  if (!h.has_edge(e.u, e.v)) {
    throw GraphError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
}

}  // namespace

unsigned wt_cp(const Graph& h, Edge e) {
  require_edge(h, e);
  Vertex u = e.u;
  Vertex v = e.v;
  if (h.degree(u) > h.degree(v)) std::swap(u, v);
  const auto ru = h.row(u);
  const auto rv = h.row(v);
  std::size_t common = 0;
  std::size_t v_only = 0;
  for (std::size_t w = 0; w < ru.size(); ++w) {
    common += static_cast<std::size_t>(std::popcount(ru[w] & rv[w]));
    v_only += static_cast<std::size_t>(std::popcount(rv[w] & ~ru[w]));
  }
  // v_only counts u itself, so the sum is at least 1.
  return static_cast<unsigned>(2 * common + v_only - 1);
}

unsigned wt0(const Graph& h, Edge e) {
  require_edge(h, e);
  return static_cast<unsigned>(std::max(h.degree(e.u), h.degree(e.v)) - 1);
}

std::optional<unsigned> wt1(const Graph& h, Edge e) {
  const auto nbhd = edge_neighborhood(h, e.u, e.v);
  if (nbhd.empty()) return std::nullopt;
  std::size_t best = 0;
  for (auto w : nbhd) best = std::max(best, h.degree(w));
  return static_cast<unsigned>(best);
}

EdgeWeights edge_weights(const Graph& h, Edge e) {
  return {e.normalized(), wt_cp(h, e), wt0(h, e), wt1(h, e)};
}

bool has_isolated_edge(const Graph& h) {
  for (const auto& e : h.edges()) {
    if (h.degree(e.u) == 1 && h.degree(e.v) == 1) return true;
  }
  return false;
}

WeightSummary weight_summary(const Graph& h) {
  if (h.size() == 0) throw PatternError("pattern has no edges");
  WeightSummary s;
  for (const auto& e : h.edges()) {
    auto w = edge_weights(h, e);
    if (!w.wt1) {
      throw PatternError("pattern has an isolated edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "); its saturation number is O(1)");
    }
    s.per_edge.push_back(w);
  }

  constexpr auto kInf = std::numeric_limits<unsigned>::max();
  s.k0 = s.k1 = s.min_wt_cp = kInf;
  // per_edge is in ascending edge order, so strict comparisons keep the
  // lexicographically least witness.
  for (const auto& w : s.per_edge) {
    if (w.wt0 < s.k0) s.k0 = w.wt0, s.witnesses.k0 = w.edge;
    if (*w.wt1 < s.k1) s.k1 = *w.wt1, s.witnesses.k1 = w.edge;
    if (w.wt_cp < s.min_wt_cp) s.min_wt_cp = w.wt_cp, s.witnesses.min_wt_cp = w.edge;
  }
  s.k0p = s.k1p = kInf;
  for (const auto& w : s.per_edge) {
    if (*w.wt1 == s.k1 && w.wt0 < s.k0p) s.k0p = w.wt0, s.witnesses.k0p = w.edge;
    if (w.wt0 == s.k0 && *w.wt1 < s.k1p) s.k1p = *w.wt1, s.witnesses.k1p = w.edge;
  }
  return s;
}

}  // namespace satnum
