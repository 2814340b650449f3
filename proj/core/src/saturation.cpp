#include "satnum/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace satnum {
namespace {

bool creates_copy(const EmbeddingSearch& search, const Graph& plus, Edge xy,
                  const std::vector<Edge>& pattern_edges, bool prefilter) {
  const Graph& h = search.pattern();
  for (const auto& e : pattern_edges) {
    for (const Edge oriented : {e, Edge{e.v, e.u}}) {
      if (prefilter && (plus.degree(xy.u) < h.degree(oriented.u) ||
                        plus.degree(xy.v) < h.degree(oriented.v))) {
        continue;
      }
      if (search.find(plus, Anchor{oriented, xy})) return true;
    }
  }
  return false;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

bool is_h_free(const Graph& g, const Graph& h) { return !find_embedding(g, h).has_value(); }

SaturationVerdict is_h_saturated(const Graph& g, const Graph& h, const SaturationOptions& options) {
  return is_h_saturated(g, EmbeddingSearch(h), options);
}

SaturationVerdict is_h_saturated(const Graph& g, const EmbeddingSearch& search,
                                 const SaturationOptions& options) {
  SaturationVerdict verdict;
  verdict.free_witness = search.find(g);
  verdict.is_free = !verdict.free_witness;
  if (!verdict.is_free) return verdict;

  const auto gaps = non_edges(g);
  const auto pattern_edges = search.pattern().edges();
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{kNone};

  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= gaps.size() || i > first_failure.load()) return;
      const auto xy = gaps[i];
      if (!creates_copy(search, add_edge(g, xy.u, xy.v), xy, pattern_edges,
                        options.degree_prefilter)) {
        auto seen = first_failure.load();
        while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };

  const auto threads = std::min<std::size_t>(resolve_threads(options.threads), gaps.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (first_failure.load() != kNone) {
    verdict.maximality_counterexample = gaps[first_failure.load()];
  } else {
    verdict.is_saturated = true;
  }
  return verdict;
}

PropertyPResult satisfies_property_p(const Graph& g, unsigned k0, unsigned k1p) {
  const auto n = g.order();
  auto side_ok = [&](Vertex x, Vertex y) {
    const auto rx = g.row(x);
    for (auto z : g.neighbors(x)) {
      const auto rz = g.row(z);
      std::size_t outside = 0;
      for (std::size_t w = 0; w < rz.size(); ++w) {
        outside += static_cast<std::size_t>(std::popcount(rz[w] & ~rx[w]));
      }
      if (g.has_edge(z, y)) --outside;
      if (outside >= k1p) return true;
    }
    return false;
  };
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) > k0) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.degree(y) > k0 || g.has_edge(x, y)) continue;
      if (!side_ok(x, y) && !side_ok(y, x)) return {false, Edge{x, y}};
    }
  }
  return {};
}

std::vector<NamedCheck> check_clique_propositions(const Graph& g, const WeightSummary& summary,
                                                  bool triangle_free) {
  const auto n = g.order();
  const auto deg = g.degrees();
  auto has_neighbor_at_least = [&](Vertex v, std::size_t bound) {
    bool found = false;
    bits::for_each(g.row(v), [&](Vertex w) { found = found || deg[w] >= bound; });
    return found;
  };
  auto check = [&](std::string name, auto&& member) {
    NamedCheck c{std::move(name), false, {}};
    for (Vertex v = 0; v < n; ++v) {
      if (member(v)) c.members.push_back(v);
    }
    c.passed = is_clique(g, c.members);
    return c;
  };

  std::vector<NamedCheck> out;
  out.push_back(check("low-degree-clique", [&](Vertex v) { return deg[v] < summary.k0; }));
  out.push_back(check("no-k1-neighbor-clique",
                      [&](Vertex v) { return !has_neighbor_at_least(v, summary.k1); }));
  out.push_back(check("low-no-k1p-neighbor-clique", [&](Vertex v) {
    return deg[v] <= summary.k0 && !has_neighbor_at_least(v, summary.k1p);
  }));
  if (triangle_free && summary.k0 < summary.k1p) {
    out.push_back(check("triangle-free-clique", [&](Vertex v) {
      if (deg[v] > summary.k0) return false;
      std::vector<Vertex> high;
      bits::for_each(g.row(v), [&](Vertex w) {
        if (deg[w] >= summary.k1p) high.push_back(w);
      });
      if (high.empty()) return true;
      if (high.size() != 1 || deg[high[0]] != summary.k1p) return false;
      const auto rv = g.row(v);
      const auto rw = g.row(high[0]);
      for (std::size_t w = 0; w < rv.size(); ++w) {
        if (rv[w] & rw[w]) return true;
      }
      return false;
    }));
  }
  return out;
}

DegreePartition degree_partition(const Graph& g, unsigned k0, unsigned k1p,
                                 bool xl_threshold_strict) {
  DegreePartition p;
  const auto deg = g.degrees();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] <= k0) {
      p.S.push_back(v);
    } else if (deg[v] < k1p) {
      p.M.push_back(v);
    } else if (xl_threshold_strict && deg[v] > k1p) {
      p.XL.push_back(v);
    } else {
      p.L.push_back(v);
    }
  }
  auto average = [&](const std::vector<Vertex>& set) -> std::optional<Rational> {
    if (set.empty()) return std::nullopt;
    std::int64_t sum = 0;
    for (auto v : set) sum += static_cast<std::int64_t>(deg[v]);
    return Rational(sum, static_cast<std::int64_t>(set.size()));
  };
  p.d_L = average(p.L);
  p.d_XL = average(p.XL);

  std::vector<bool> high(g.order(), false);
  for (auto v : p.L) high[v] = true;
  for (auto v : p.XL) high[v] = true;
  for (auto v : p.S) {
    if (deg[v] < k0) p.clique_A.push_back(v);
    bool touches = false;
    bits::for_each(g.row(v), [&](Vertex w) { touches = touches || high[w]; });
    if (!touches) p.clique_B.push_back(v);
  }
  return p;
}

}  // namespace satnum
