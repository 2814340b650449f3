#include "satnum/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace satnum {

EdgeLevelEnumerator::EdgeLevelEnumerator(std::size_t n) : n_(n) {
  if (n > kMaxCanonicalOrder) {
    throw GraphError("enumeration supports order <= " + std::to_string(kMaxCanonicalOrder));
  }
  level_.push_back(canonical_form(Graph(n)));
}

bool EdgeLevelEnumerator::advance() {
  if (level_.empty()) return false;
  std::unordered_set<CanonicalForm, CanonicalFormHash> next;
  for (const auto& form : level_) {
    const Graph g = form.to_graph();
    for (const auto& e : non_edges(g)) next.insert(canonical_form(add_edge(g, e.u, e.v)));
  }
  level_.assign(next.begin(), next.end());
  std::sort(level_.begin(), level_.end());
  ++edges_;
  return !level_.empty();
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t edge_count) {
  EdgeLevelEnumerator it(n);
  while (it.edges() < edge_count && it.advance()) {
  }
  std::vector<Graph> out;
  if (it.edges() != edge_count) return out;
  for (const auto& f : it.level()) out.push_back(f.to_graph());
  return out;
}

}  // namespace satnum
