#include "satnum/embedding.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace satnum {
namespace {

constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

thread_local std::uint64_t g_nodes = 0;

void fill_prefix(std::span<std::uint64_t> mask, std::size_t n) {
  std::fill(mask.begin(), mask.end(), 0);
  for (std::size_t w = 0; w < mask.size(); ++w) {
    const std::size_t lo = w * bits::kWordBits;
    if (lo >= n) break;
    const std::size_t count = std::min(bits::kWordBits, n - lo);
    mask[w] = count == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
  }
}

}  // namespace

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (e.map.size() != pattern.order()) return false;
  std::vector<bool> seen(host.order(), false);
  for (auto x : e.map) {
    if (x >= host.order() || seen[x]) return false;
    seen[x] = true;
  }
  for (const auto& edge : pattern.edges()) {
    if (!host.has_edge(e.map[edge.u], e.map[edge.v])) return false;
  }
  return true;
}

EmbeddingSearch::EmbeddingSearch(Graph pattern) : pattern_(std::move(pattern)) {
  const auto n = pattern_.order();
  pendant_.assign(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (pattern_.degree(v) == 1) {
      const Vertex parent = pattern_.neighbors(v).front();
      pendant_[v] = pattern_.degree(parent) >= 2;
    } else if (pattern_.degree(v) == 0) {
      pendant_[v] = true;
    }
  }
  free_plan_ = make_plan(std::nullopt);
  edge_index_.assign(n, std::vector<std::size_t>(n, 0));
  for (const auto& e : pattern_.edges()) {
    for (const Edge oriented : {e, Edge{e.v, e.u}}) {
      edge_index_[oriented.u][oriented.v] = anchored_plans_.size();
      anchored_plans_.push_back(make_plan(oriented));
    }
  }
}

EmbeddingSearch::Plan EmbeddingSearch::make_plan(std::optional<Edge> anchor) const {
  const auto n = pattern_.order();
  std::vector<bool> core(n);
  for (Vertex v = 0; v < n; ++v) core[v] = !pendant_[v];
  if (anchor) core[anchor->u] = core[anchor->v] = true;

  Plan plan;
  std::vector<std::size_t> position(n, std::numeric_limits<std::size_t>::max());
  auto place = [&](Vertex v) {
    position[v] = plan.order.size();
    plan.order.push_back(v);
  };
  if (anchor) {
    place(anchor->u);
    place(anchor->v);
  }
  const auto core_count = static_cast<std::size_t>(std::count(core.begin(), core.end(), true));
  while (plan.order.size() < core_count) {
    // Most ordered neighbors first, then highest degree, then lowest index.
    std::optional<Vertex> best;
    std::tuple<std::size_t, std::size_t> best_key{};
    for (Vertex v = 0; v < n; ++v) {
      if (!core[v] || position[v] != std::numeric_limits<std::size_t>::max()) continue;
      std::size_t ordered = 0;
      for (auto w : pattern_.neighbors(v)) {
        if (position[w] != std::numeric_limits<std::size_t>::max()) ++ordered;
      }
      const auto key = std::make_tuple(ordered, pattern_.degree(v));
      if (!best || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    place(*best);
  }
  plan.back.resize(plan.order.size());
  for (std::size_t pos = 0; pos < plan.order.size(); ++pos) {
    for (auto w : pattern_.neighbors(plan.order[pos])) {
      if (core[w] && position[w] < pos) plan.back[pos].push_back(position[w]);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (core[v]) continue;
    plan.deferred.push_back(v);
    plan.parent.push_back(pattern_.degree(v) == 1 ? std::optional<Vertex>(pattern_.neighbors(v).front())
                                                  : std::nullopt);
  }
  return plan;
}

const EmbeddingSearch::Plan& EmbeddingSearch::plan_for(Edge anchor_edge) const {
  if (!pattern_.has_edge(anchor_edge.u, anchor_edge.v)) {
    throw GraphError("anchor is not a pattern edge");
  }
  return anchored_plans_[edge_index_[anchor_edge.u][anchor_edge.v]];
}

std::optional<Embedding> EmbeddingSearch::find(const Graph& host) const {
  return run(free_plan_, host, std::nullopt);
}

std::optional<Embedding> EmbeddingSearch::find(const Graph& host, const Anchor& anchor) const {
  if (anchor.host_pair.u >= host.order() || anchor.host_pair.v >= host.order()) {
    throw GraphError("anchor host vertex out of range");
  }
  return run(plan_for(anchor.pattern_edge), host, anchor.host_pair);
}

std::uint64_t EmbeddingSearch::last_node_count() noexcept { return g_nodes; }

namespace {

// Backtracking state for one search.
class Runner {
 public:
  Runner(const Graph& pattern, const Graph& host, std::span<const Vertex> order,
         const std::vector<std::vector<std::size_t>>& back, std::span<const Vertex> deferred,
         std::span<const std::optional<Vertex>> parent, std::optional<Edge> host_pair)
      : pattern_(pattern),
        host_(host),
        order_(order),
        back_(back),
        deferred_(deferred),
        parent_(parent),
        host_pair_(host_pair),
        words_(host.words_per_row()),
        map_(pattern.order(), kUnmapped),
        used_(words_, 0),
        all_(words_, 0),
        scratch_((order.size() + 1) * words_, 0),
        match_owner_(host.order(), -1),
        visited_(words_, 0) {
    fill_prefix(all_, host.order());
  }

  bool run() { return extend(0); }
  Embedding result() const { return {map_}; }

 private:
  std::span<std::uint64_t> cand(std::size_t depth) { return {scratch_.data() + depth * words_, words_}; }

  bool extend(std::size_t pos) {
    ++g_nodes;
    if (pos == order_.size()) return place_deferred();
    const Vertex p = order_[pos];
    auto c = cand(pos);
    if (back_[pos].empty()) {
      std::copy(all_.begin(), all_.end(), c.begin());
    } else {
      auto first = host_.row(map_[order_[back_[pos][0]]]);
      std::copy(first.begin(), first.end(), c.begin());
      for (std::size_t i = 1; i < back_[pos].size(); ++i) {
        const auto r = host_.row(map_[order_[back_[pos][i]]]);
        for (std::size_t w = 0; w < words_; ++w) c[w] &= r[w];
      }
    }
    for (std::size_t w = 0; w < words_; ++w) c[w] &= ~used_[w];
    if (host_pair_ && pos < 2) {
      const Vertex fixed = pos == 0 ? host_pair_->u : host_pair_->v;
      const bool ok = bits::test(c, fixed);
      std::fill(c.begin(), c.end(), 0);
      if (ok) bits::set(c, fixed);
    }
    const auto need = pattern_.degree(p);
    bool found = false;
    bits::for_each(std::span<const std::uint64_t>(c), [&](Vertex x) {
      if (found || host_.degree(x) < need) return;
      map_[p] = x;
      bits::set(used_, x);
      if (extend(pos + 1)) {
        found = true;
        return;
      }
      bits::reset(used_, x);
      map_[p] = kUnmapped;
    });
    return found;
  }

  std::vector<std::uint64_t> candidates_for(std::size_t d) const {
    std::vector<std::uint64_t> c(words_);
    if (parent_[d]) {
      const auto r = host_.row(map_[*parent_[d]]);
      for (std::size_t w = 0; w < words_; ++w) c[w] = r[w] & ~used_[w];
    } else {
      for (std::size_t w = 0; w < words_; ++w) c[w] = all_[w] & ~used_[w];
    }
    return c;
  }

  bool augment(std::size_t d, const std::vector<std::vector<std::uint64_t>>& cands) {
    bool done = false;
    bits::for_each(std::span<const std::uint64_t>(cands[d]), [&](Vertex x) {
      if (done || bits::test(visited_, x)) return;
      bits::set(visited_, x);
      const int owner = match_owner_[x];
      if (owner < 0 || augment(static_cast<std::size_t>(owner), cands)) {
        match_owner_[x] = static_cast<int>(d);
        done = true;
      }
    });
    return done;
  }

  bool place_deferred() {
    if (deferred_.empty()) return true;
    std::vector<std::vector<std::uint64_t>> cands;
    cands.reserve(deferred_.size());
    for (std::size_t d = 0; d < deferred_.size(); ++d) {
      cands.push_back(candidates_for(d));
      if (bits::popcount(cands.back()) == 0) return false;
    }
    std::fill(match_owner_.begin(), match_owner_.end(), -1);
    for (std::size_t d = 0; d < deferred_.size(); ++d) {
      std::fill(visited_.begin(), visited_.end(), 0);
      if (!augment(d, cands)) return false;
    }
    for (Vertex x = 0; x < host_.order(); ++x) {
      if (match_owner_[x] >= 0) map_[deferred_[static_cast<std::size_t>(match_owner_[x])]] = x;
    }
    return true;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::span<const Vertex> order_;
  const std::vector<std::vector<std::size_t>>& back_;
  std::span<const Vertex> deferred_;
  std::span<const std::optional<Vertex>> parent_;
  std::optional<Edge> host_pair_;
  std::size_t words_;
  std::vector<Vertex> map_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> all_;
  std::vector<std::uint64_t> scratch_;
  std::vector<int> match_owner_;
  std::vector<std::uint64_t> visited_;
};

}  // namespace

std::optional<Embedding> EmbeddingSearch::run(const Plan& plan, const Graph& host,
                                              std::optional<Edge> host_pair) const {
  g_nodes = 0;
  if (pattern_.order() > host.order()) return std::nullopt;
  if (pattern_.order() == 0) return Embedding{};
  if (host_pair) {
    if (host_pair->u == host_pair->v || !host.has_edge(host_pair->u, host_pair->v)) {
      return std::nullopt;
    }
  }
  Runner runner(pattern_, host, plan.order, plan.back, plan.deferred, plan.parent, host_pair);
  if (!runner.run()) return std::nullopt;
  return runner.result();
}

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern,
                                        const std::optional<Anchor>& anchor) {
  EmbeddingSearch search(pattern);
  return anchor ? search.find(host, *anchor) : search.find(host);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return find_embedding(a, b).has_value();
}

}  // namespace satnum
