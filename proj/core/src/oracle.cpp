#include "satnum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "satnum/bounds.hpp"
#include "satnum/constructions.hpp"
#include "satnum/enumerate.hpp"
#include "satnum/saturation.hpp"

namespace satnum {
namespace {

std::size_t start_from_bound(const Graph& h, std::size_t n) {
  try {
    const auto value = best_lower_bound(h, n).integer_value();
    return value && *value > 0 ? static_cast<std::size_t>(*value) : 0;
  } catch (const PatternError&) {
    return 0;  // isolated edges: outside the bound machinery
  }
}

std::vector<bool> test_level(const std::vector<CanonicalForm>& level, const EmbeddingSearch& search,
                             unsigned threads) {
  std::vector<char> hit(level.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < level.size();) {
      hit[i] = is_h_saturated(level[i].to_graph(), search).is_saturated ? 1 : 0;
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  if (threads <= 1 || level.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return {hit.begin(), hit.end()};
}

std::vector<std::pair<std::string, std::uint64_t>> construction_sizes(const Graph& h,
                                                                      std::size_t n) {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  const std::vector<Vertex> all = [&] {
    std::vector<Vertex> v(h.order());
    for (Vertex i = 0; i < h.order(); ++i) v[i] = i;
    return v;
  }();
  if (h.order() >= 3 && is_clique(h, all)) {
    const auto t = static_cast<unsigned>(h.order() - 1);
    if (n >= t + 1) out.emplace_back("ehm", ehm_construction(t, n).graph.size());
  }
  if (const auto st = recognize_double_star(h); st && st->first >= 2 && st->first < st->second) {
    if (n >= double_star_threshold(st->first, st->second)) {
      out.emplace_back("saturated-double-star",
                       saturated_double_star(st->first, st->second, n).graph.size());
    }
  }
  if (const auto p = recognize_caterpillar_p5(h)) {
    const unsigned s = *p + 1;
    if (n >= shorty_threshold(s)) {
      out.emplace_back("saturated-shorty", saturated_shorty(s, n).graph.size());
    }
  }
  return out;
}

}  // namespace

SatResult brute_force_sat(std::size_t n, const Graph& h, const SatOptions& options) {
  if (n > kMaxCanonicalOrder) {
    throw OracleError("n = " + std::to_string(n) + " exceeds the supported order " +
                      std::to_string(kMaxCanonicalOrder));
  }
  if (h.size() == 0) throw OracleError("pattern has no edges");
  if (n < h.order()) throw OracleError("n is smaller than the pattern order");

  SatResult result;
  result.n = n;
  result.pattern = h;
  result.start_edges = options.audit ? 0 : start_from_bound(h, n);
  const EmbeddingSearch search(h);

  EdgeLevelEnumerator levels(n);
  while (levels.edges() < result.start_edges && levels.advance()) {
  }
  for (;;) {
    const auto m = levels.edges();
    if (options.edge_cap && m > *options.edge_cap) {
      throw OracleError("no saturated graph with at most " + std::to_string(*options.edge_cap) +
                        " edges");
    }
    const auto& level = levels.level();
    const auto hits = test_level(level, search, options.threads);
    result.graphs_examined += level.size();
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (hits[i]) result.witnesses.push_back(level[i].to_graph());
    }
    if (!result.witnesses.empty()) {
      result.sat_value = m;
      return result;
    }
    if (!levels.advance()) break;
  }
  // Unreachable: a maximal H-free graph always exists.
  throw OracleError("no saturated graph found");
}

BoundAudit audit_bounds_against_oracle(const std::vector<Graph>& corpus, std::size_t n_max,
                                       unsigned threads) {
  BoundAudit audit;
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    const auto& h = corpus[p];
    for (std::size_t n = h.order(); n <= n_max; ++n) {
      SatOptions options;
      options.audit = true;
      options.threads = threads;
      const auto sat = brute_force_sat(n, h, options);
      BoundAuditEntry entry;
      entry.pattern_index = p;
      entry.n = n;
      entry.sat_value = sat.sat_value;
      const auto where = "pattern " + std::to_string(p) + ", n = " + std::to_string(n) + ": ";
      if (!has_isolated_edge(h)) {
        const auto bound = best_lower_bound(h, n);
        entry.best_lower = bound.integer_value();
        if (*entry.best_lower > static_cast<std::int64_t>(sat.sat_value)) {
          audit.violations.push_back(where + bound.name + " gives " + std::to_string(*entry.best_lower) +
                                     " > sat = " + std::to_string(sat.sat_value));
        }
      }
      entry.construction_sizes = construction_sizes(h, n);
      for (const auto& [name, size] : entry.construction_sizes) {
        if (size < sat.sat_value) {
          audit.violations.push_back(where + name + " has " + std::to_string(size) +
                                     " edges < sat = " + std::to_string(sat.sat_value));
        }
      }
      audit.entries.push_back(std::move(entry));
    }
  }
  return audit;
}

}  // namespace satnum
