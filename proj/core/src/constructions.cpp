#include "satnum/constructions.hpp"

#include <algorithm>
#include <set>

#include "satnum/bounds.hpp"
#include "satnum/generators.hpp"

namespace satnum {
namespace {

using Classes = std::vector<std::vector<Vertex>>;
using Pairing = std::pair<unsigned, unsigned>;

std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

// a[i] joins b[(i + j) mod |a|] for j < degree.
void wire_bipartite(Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                    std::size_t degree) {
  if (a.size() != b.size() || degree > a.size()) {
    throw ConstructionError("bipartite wiring needs equal classes of size >= degree");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < degree; ++j) g.insert_edge(a[i], b[(i + j) % a.size()]);
  }
}

// Pairs the leaf classes of p matched double stars (classes 2j and 2j+1
// belong to partner hubs) so that no pair joins partners.
std::vector<Pairing> cross_pairings(unsigned p) {
  if (p == 1) return {{0, 1}};
  std::vector<Pairing> out;
  unsigned first = 0;
  if (p % 2 == 1) {
    out = {{1, 2}, {3, 4}, {0, 5}};
    first = 3;
  }
  for (unsigned a = first; a + 1 < p; a += 2) {
    out.emplace_back(2 * a, 2 * a + 2);
    out.emplace_back(2 * a + 1, 2 * a + 3);
  }
  return out;
}

// Moves edges a[i]b[i] of paired classes onto the special vertex v until
// `swaps` are done. Distinct pairings are used before any is reused, and
// pairings that avoid v's own hub classes come first. Classes in
// `forbidden` are never touched; v gets at most capacity[c] neighbors in
// class c when c has a cap.
void swap_onto_special(Graph& g, const Classes& classes, const std::vector<Pairing>& pairings,
                       Vertex v, unsigned swaps, const std::set<unsigned>& forbidden,
                       const std::map<unsigned, std::size_t>& capacity) {
  std::vector<Pairing> order;
  for (const auto& pr : pairings) {
    if (!capacity.count(pr.first) && !capacity.count(pr.second)) order.push_back(pr);
  }
  for (const auto& pr : pairings) {
    if (capacity.count(pr.first) || capacity.count(pr.second)) order.push_back(pr);
  }
  std::map<unsigned, std::size_t> used;
  auto room = [&](unsigned c) {
    const auto it = capacity.find(c);
    return it == capacity.end() || used[c] < it->second;
  };
  for (std::size_t round = 0; swaps > 0; ++round) {
    bool progressed = false;
    for (const auto& [x, y] : order) {
      if (swaps == 0) break;
      if (forbidden.count(x) || forbidden.count(y) || !room(x) || !room(y)) continue;
      const auto& a = classes[x];
      const auto& b = classes[y];
      if (round >= std::min(a.size(), b.size()) || !g.has_edge(a[round], b[round])) continue;
      g.erase_edge(a[round], b[round]);
      g.insert_edge(v, a[round]);
      g.insert_edge(v, b[round]);
      ++used[x];
      ++used[y];
      --swaps;
      progressed = true;
    }
    if (!progressed) {
      throw ConstructionError("not enough class pairs to complete the special vertex");
    }
  }
}

std::vector<Vertex> vertices_with(const std::vector<RoleLabel>& roles, Role role) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < roles.size(); ++v) {
    if (roles[v].role == role) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<bool>& mask) {
  std::vector<Vertex> out;
  for (auto v : a) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

void finish(ConstructionReport& report, std::vector<PropertyCheck> checks) {
  report.properties_checked.push_back(
      {"size-matches-formula", report.graph.size() == report.expected_size});
  for (auto& c : checks) report.properties_checked.push_back(std::move(c));
  for (const auto& c : report.properties_checked) {
    if (!c.passed) throw ConstructionError("construction audit failed: " + c.name);
  }
}

std::uint64_t exact_size(const Rational& value) {
  if (!value.is_integer() || value.num() < 0) {
    throw ConstructionError("size formula is not a nonnegative integer: " + value.str());
  }
  return static_cast<std::uint64_t>(value.num());
}

void check_double_star_params(unsigned s, unsigned t, std::size_t n) {
  if (s < 2) throw ConstructionError("construction requires s >= 2");
  if (s >= t) throw ConstructionError("construction requires s < t");
  const auto threshold = double_star_threshold(s, t);
  if (n < threshold) {
    throw ConstructionError("n = " + std::to_string(n) + " is below the threshold " +
                            std::to_string(threshold));
  }
}

void check_shorty_params(unsigned s, std::size_t n) {
  if (s < 1) throw ConstructionError("construction requires s >= 1");
  const auto threshold = shorty_threshold(s);
  if (n < threshold) {
    throw ConstructionError("n = " + std::to_string(n) + " is below the threshold " +
                            std::to_string(threshold));
  }
}

// Hubs 0..hubs-1, classes of `base` leaves each, then `extra` remainder
// vertices appended to each of the classes in `enlarged`, then the spare
// vertices (special and clique) at the end.
struct Layout {
  Classes classes;
  std::vector<RoleLabel> roles;
  Vertex next{0};
};

Layout lay_out(unsigned hubs, std::size_t base, std::pair<unsigned, unsigned> enlarged,
               std::size_t extra, std::size_t order) {
  Layout lay;
  lay.roles.resize(order);
  lay.classes.resize(hubs);
  for (unsigned h = 0; h < hubs; ++h) lay.roles[h] = {Role::hub, h, std::nullopt};
  lay.next = hubs;
  for (unsigned h = 0; h < hubs; ++h) {
    for (std::size_t i = 0; i < base; ++i) {
      lay.roles[lay.next] = {Role::leaf, h, std::nullopt};
      lay.classes[h].push_back(lay.next++);
    }
  }
  for (const unsigned h : {enlarged.first, enlarged.second}) {
    for (std::size_t i = 0; i < extra; ++i) {
      lay.roles[lay.next] = {Role::remainder, h, std::nullopt};
      lay.classes[h].push_back(lay.next++);
    }
  }
  return lay;
}

void add_clique(Graph& g, std::vector<RoleLabel>& roles, Vertex first, std::size_t count) {
  for (Vertex a = first; a < first + count; ++a) {
    roles[a] = {Role::clique, std::nullopt, std::nullopt};
    for (Vertex b = a + 1; b < first + count; ++b) g.insert_edge(a, b);
  }
}

}  // namespace

const char* to_string(Role role) noexcept {
  switch (role) {
    case Role::hub: return "hub";
    case Role::leaf: return "leaf";
    case Role::clique: return "clique";
    case Role::remainder: return "remainder";
    case Role::special: return "special";
  }
  return "leaf";
}

bool ConstructionReport::all_passed() const {
  return std::all_of(properties_checked.begin(), properties_checked.end(),
                     [](const PropertyCheck& c) { return c.passed; });
}

Graph double_star(unsigned s, unsigned t) {
  if (s < 1 || t < 1) throw ConstructionError("double star requires s, t >= 1");
  Graph g(s + t);
  g.insert_edge(0, 1);
  Vertex next = 2;
  for (unsigned i = 1; i < s; ++i) g.insert_edge(0, next++);
  for (unsigned i = 1; i < t; ++i) g.insert_edge(1, next++);
  return g;
}

Graph caterpillar_p5(unsigned s) {
  Graph g = gen::path(5);
  Vertex next = 5;
  g = disjoint_union(g, gen::empty(3 * static_cast<std::size_t>(s)));
  for (Vertex spine = 1; spine <= 3; ++spine) {
    for (unsigned i = 0; i < s; ++i) g.insert_edge(spine, next++);
  }
  return g;
}

std::optional<std::pair<unsigned, unsigned>> recognize_double_star(const Graph& h) {
  if (h.size() == 0 || h.size() + 1 != h.order()) return std::nullopt;
  for (const auto& e : h.edges()) {
    bool ok = true;
    for (Vertex w = 0; w < h.order() && ok; ++w) {
      if (w == e.u || w == e.v) continue;
      ok = h.degree(w) == 1 && (h.has_edge(w, e.u) || h.has_edge(w, e.v));
    }
    if (ok) {
      const auto a = static_cast<unsigned>(h.degree(e.u));
      const auto b = static_cast<unsigned>(h.degree(e.v));
      return std::make_pair(std::min(a, b), std::max(a, b));
    }
  }
  return std::nullopt;
}

std::optional<unsigned> recognize_caterpillar_p5(const Graph& h) {
  if (h.order() < 5 || (h.order() - 5) % 3 != 0 || h.size() + 1 != h.order()) return std::nullopt;
  const auto s = static_cast<unsigned>((h.order() - 5) / 3);
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) return std::nullopt;
    if (h.degree(v) >= 2) inner.push_back(v);
  }
  if (inner.size() != 3) return std::nullopt;
  for (auto v : inner) {
    if (h.degree(v) != s + 2) return std::nullopt;
  }
  // The three inner vertices must form a path, and a tree with exactly
  // these degrees is then connected.
  const int links = int(h.has_edge(inner[0], inner[1])) + int(h.has_edge(inner[0], inner[2])) +
                    int(h.has_edge(inner[1], inner[2]));
  if (links != 2) return std::nullopt;
  return s;
}

Rational double_star_construction_size(unsigned s, unsigned t, std::size_t n) {
  if (s < 1 || s >= t || n < s) throw ConstructionError("requires 1 <= s < t and n >= s");
  const auto si = i64(s), ti = i64(t);
  const auto r = i64((n - s) % (2 * t + 4));
  const Rational slope(si * (ti + 1), ti + 2);
  const Rational shift(si * (ti - si + 2), 2 * ti + 4);
  if (r % 2 == 0) {
    return slope * Rational(i64(n), 2) - shift + Rational(si * r, 2 * ti + 4);
  }
  return slope * Rational(i64(n) - 1, 2) - shift + Rational(si * (r - 1), 2 * ti + 4) +
         Rational((si + 1) / 2);
}

Rational shorty_construction_size(unsigned s, std::size_t n) {
  if (s < 1 || n < s + 1) throw ConstructionError("requires s >= 1 and n > s");
  const auto si = i64(s);
  const auto r = i64((n - s - 1) % (2 * s + 4));
  const Rational slope = Rational(si) + Rational(2, si + 2);
  const Rational shift(si + 1, si + 2);
  if (r % 2 == 0) {
    return slope * Rational(i64(n), 2) - shift + Rational(r * si, 2 * si + 4);
  }
  return slope * Rational(i64(n) - 1, 2) - shift + Rational((r - 1) * si, 2 * si + 4) +
         Rational((si + 2) / 2);
}

ConstructionReport saturated_double_star(unsigned s, unsigned t, std::size_t n) {
  check_double_star_params(s, t, n);
  const std::size_t block = 2 * static_cast<std::size_t>(t) + 4;
  const auto p = static_cast<unsigned>((n - s) / block);
  const std::size_t r = (n - s) % block;
  const std::size_t extra = r / 2;  // (r-1)/2 when r is odd
  const unsigned hubs = 2 * p;

  ConstructionReport report;
  report.expected_size = exact_size(double_star_construction_size(s, t, n));
  report.graph = Graph(n);
  auto lay = lay_out(hubs, t + 1, {0, 1}, extra, n);
  Graph& g = report.graph;
  for (unsigned h = 0; h < hubs; ++h) {
    for (auto w : lay.classes[h]) g.insert_edge(h, w);
  }
  std::vector<Pairing> pairings;
  for (unsigned j = 0; j < p; ++j) pairings.emplace_back(2 * j, 2 * j + 1);
  for (const auto& [a, b] : pairings) wire_bipartite(g, lay.classes[a], lay.classes[b], s - 2);

  if (r % 2 == 1) {
    const Vertex v = lay.next;
    lay.roles[v] = {Role::special, std::nullopt, std::nullopt};
    std::vector<unsigned> v_hubs = s % 2 == 0 ? std::vector<unsigned>{0} : std::vector<unsigned>{0, 1};
    std::map<unsigned, std::size_t> capacity;
    for (auto h : v_hubs) {
      g.insert_edge(v, h);
      capacity[h] = lay.classes[h].size() - t;
    }
    swap_onto_special(g, lay.classes, pairings, v, s / 2 - 1, {}, capacity);
  }
  add_clique(g, lay.roles, static_cast<Vertex>(n - s), s);
  report.roles = std::move(lay.roles);
  finish(report, audit_double_star(g, report.roles, s, t));
  return report;
}

ConstructionReport saturated_shorty(unsigned s, std::size_t n) {
  check_shorty_params(s, n);
  const std::size_t block = 2 * static_cast<std::size_t>(s) + 4;
  const auto p = static_cast<unsigned>((n - s - 1) / block);
  const std::size_t r = (n - s - 1) % block;
  const unsigned hubs = 2 * p;
  const auto pairings = cross_pairings(p);
  const auto first = pairings.front();

  ConstructionReport report;
  report.expected_size = exact_size(shorty_construction_size(s, n));
  report.graph = Graph(n);
  auto lay = lay_out(hubs, s + 1, first, r / 2, n);
  Graph& g = report.graph;
  for (unsigned h = 0; h < hubs; ++h) {
    lay.roles[h].partner = h ^ 1U;
    if (h % 2 == 0) g.insert_edge(h, h + 1);
    for (auto w : lay.classes[h]) g.insert_edge(h, w);
  }
  for (const auto& [a, b] : pairings) wire_bipartite(g, lay.classes[a], lay.classes[b], s - 1);

  if (r % 2 == 1) {
    const Vertex v = lay.next;
    lay.roles[v] = {Role::special, std::nullopt, std::nullopt};
    std::vector<unsigned> v_hubs{first.first};
    if (s % 2 == 0) v_hubs.push_back(first.second);
    std::set<unsigned> forbidden;
    std::map<unsigned, std::size_t> capacity;
    for (auto h : v_hubs) {
      g.insert_edge(v, h);
      forbidden.insert(h ^ 1U);
      capacity[h] = lay.classes[h].size() - s;
    }
    const unsigned swaps = (s - static_cast<unsigned>(v_hubs.size())) / 2;
    swap_onto_special(g, lay.classes, pairings, v, swaps, forbidden, capacity);
  }
  add_clique(g, lay.roles, static_cast<Vertex>(n - s - 1), s + 1);
  report.roles = std::move(lay.roles);
  finish(report, audit_shorty(g, report.roles, s));
  return report;
}

ConstructionReport example_kdelta_star(unsigned delta, unsigned k, unsigned ell) {
  if (delta == 0) throw ConstructionError("delta must be positive");
  if (delta >= k) throw ConstructionError("delta must be smaller than k");
  if (ell == 0) throw ConstructionError("ell must be positive");
  if ((delta - 1) % 2 == 1 && k % 2 == 1 && ell % 2 == 1) {
    throw ConstructionError("parity: (delta-1) k ell is odd, no regular leaf graph exists");
  }
  const std::size_t order = static_cast<std::size_t>(k + 1) * ell;
  ConstructionReport report;
  report.expected_size = static_cast<std::uint64_t>(k) * ell * (delta + 1) / 2;
  report.graph = Graph(order);
  auto lay = lay_out(ell, k, {0, 0}, 0, order);
  Graph& g = report.graph;
  for (unsigned h = 0; h < ell; ++h) {
    for (auto w : lay.classes[h]) g.insert_edge(h, w);
  }
  if (ell % 2 == 0) {
    for (unsigned j = 0; j + 1 < ell; j += 2) {
      wire_bipartite(g, lay.classes[j], lay.classes[j + 1], delta - 1);
    }
  } else if (delta > 1) {
    // Circulant on the leaves, interleaved across stars.
    const std::size_t leaves = static_cast<std::size_t>(k) * ell;
    std::vector<std::size_t> offsets;
    for (std::size_t d = 1; d <= (delta - 1) / 2; ++d) offsets.push_back(d);
    if ((delta - 1) % 2 == 1) offsets.push_back(leaves / 2);
    const auto ring = gen::circulant(leaves, offsets);
    auto at = [&](Vertex q) { return lay.classes[q % ell][q / ell]; };
    for (const auto& e : ring.edges()) g.insert_edge(at(e.u), at(e.v));
  }
  report.roles = std::move(lay.roles);

  bool has_k_neighbor = true;
  for (Vertex v = 0; v < order; ++v) {
    if (g.degree(v) != delta) continue;
    bool found = false;
    for (auto w : g.neighbors(v)) found = found || g.degree(w) == k;
    has_k_neighbor = has_k_neighbor && found;
  }
  const Rational average(2 * i64(g.size()), i64(order));
  finish(report, {{"min-degree-delta", g.min_degree() == delta},
                  {"delta-vertices-have-k-neighbor", has_k_neighbor},
                  {"average-degree-meets-warmup",
                   average == warmup_min_avg_degree(delta, k, false)}});
  return report;
}

ConstructionReport example_kdelta_doublestar(unsigned delta, unsigned k, unsigned ell) {
  if (delta == 0) throw ConstructionError("delta must be positive");
  if (delta >= k) throw ConstructionError("delta must be smaller than k");
  if (ell == 0) throw ConstructionError("ell must be positive");
  const unsigned hubs = 2 * ell;
  const std::size_t order = 2 * static_cast<std::size_t>(k) * ell;
  ConstructionReport report;
  report.expected_size =
      static_cast<std::uint64_t>(ell) * ((2 * k - 1) + static_cast<std::uint64_t>(k - 1) * (delta - 1));
  report.graph = Graph(order);
  auto lay = lay_out(hubs, k - 1, {0, 0}, 0, order);
  Graph& g = report.graph;
  for (unsigned h = 0; h < hubs; ++h) {
    lay.roles[h].partner = h ^ 1U;
    if (h % 2 == 0) g.insert_edge(h, h + 1);
    for (auto w : lay.classes[h]) g.insert_edge(h, w);
  }
  for (const auto& [a, b] : cross_pairings(ell)) {
    wire_bipartite(g, lay.classes[a], lay.classes[b], delta - 1);
  }
  report.roles = std::move(lay.roles);

  bool degrees_ok = true;
  bool one_k_neighbor = true;
  for (Vertex v = 0; v < order; ++v) {
    degrees_ok = degrees_ok && (g.degree(v) == delta || g.degree(v) == k);
    std::size_t count = 0;
    for (auto w : g.neighbors(v)) count += g.degree(w) == k ? 1 : 0;
    one_k_neighbor = one_k_neighbor && count == 1;
  }
  const Rational average(2 * i64(g.size()), i64(order));
  finish(report, {{"degrees-delta-or-k", degrees_ok},
                  {"exactly-one-k-neighbor", one_k_neighbor},
                  {"average-degree-meets-strengthened-warmup",
                   average == warmup_min_avg_degree(delta, k, true)}});
  return report;
}

ConstructionReport ehm_construction(unsigned t, std::size_t n) {
  if (t < 2) throw ConstructionError("requires t >= 2");
  if (n < t + 1) throw ConstructionError("requires n >= t + 1");
  std::vector<std::size_t> parts(t - 1, 1);
  parts.push_back(n - t + 1);
  ConstructionReport report;
  report.graph = gen::complete_multipartite(parts);
  report.expected_size = ehm_saturation_number(t, n);
  report.roles.assign(n, RoleLabel{Role::leaf, std::nullopt, std::nullopt});
  for (Vertex v = 0; v + 1 < t; ++v) report.roles[v] = {Role::hub, v, std::nullopt};
  finish(report, {});
  return report;
}

Graph fig4_gadget() {
  return Graph::from_edge_list(10, {{0, 6}, {1, 7}, {2, 8}, {3, 9}, {0, 1}, {2, 3},
                                    {0, 4}, {2, 4}, {1, 5}, {3, 5}, {6, 8}, {7, 9}});
}

std::map<Vertex, std::string> fig4_labels() {
  return {{0, "z"}, {1, "z'"}, {2, "h2"},  {3, "h3"},  {4, "l0"},
          {5, "l1"}, {6, "x"},  {7, "y"},   {8, "l20"}, {9, "l30"}};
}

bool in_independent_set_of_size(const Graph& g, const std::vector<Vertex>& within, Vertex w,
                                std::size_t size) {
  if (size == 0) return true;
  if (std::find(within.begin(), within.end(), w) == within.end()) return false;
  std::vector<Vertex> cands;
  for (auto c : within) {
    if (c != w && !g.has_edge(c, w)) cands.push_back(c);
  }
  // Branch on the first candidate: take it or drop it.
  auto grow = [&](auto&& self, const std::vector<Vertex>& pool, std::size_t need) -> bool {
    if (need == 0) return true;
    if (pool.size() < need) return false;
    std::vector<Vertex> rest;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (!g.has_edge(pool[0], pool[i])) rest.push_back(pool[i]);
    }
    if (self(self, rest, need - 1)) return true;
    return self(self, std::vector<Vertex>(pool.begin() + 1, pool.end()), need);
  };
  return grow(grow, cands, size - 1);
}

std::vector<PropertyCheck> audit_double_star(const Graph& g, const std::vector<RoleLabel>& roles,
                                             unsigned s, unsigned t) {
  const auto hubs = vertices_with(roles, Role::hub);
  std::vector<bool> in_l(g.order(), false);
  for (auto h : hubs) in_l[h] = true;

  bool degrees = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    degrees = degrees && (in_l[v] ? g.degree(v) >= t + 1 : g.degree(v) == s - 1);
  }
  bool hub_nbhds = true;
  for (auto h : hubs) {
    const auto nbhd = g.neighbors(h);
    for (auto w : nbhd) {
      hub_nbhds = hub_nbhds && !in_l[w] && in_independent_set_of_size(g, nbhd, w, t + 1);
    }
  }
  std::vector<Vertex> unattached;
  std::size_t multi = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_l[v]) continue;
    const auto count = intersect(g.neighbors(v), in_l).size();
    if (count == 0) unattached.push_back(v);
    if (count >= 2) ++multi;
  }
  const bool spare_clique = unattached.size() == s && is_clique(g, unattached) &&
                            unattached == vertices_with(roles, Role::clique);
  return {{"degrees", degrees},
          {"hub-neighborhoods-independent", hub_nbhds},
          {"spare-clique-and-single-multi-hub-vertex", spare_clique && multi <= 1}};
}

std::vector<PropertyCheck> audit_shorty(const Graph& g, const std::vector<RoleLabel>& roles,
                                        unsigned s) {
  const auto hubs = vertices_with(roles, Role::hub);
  std::vector<bool> in_l(g.order(), false);
  for (auto h : hubs) in_l[h] = true;
  std::vector<bool> in_s(g.order(), true);
  for (auto h : hubs) in_s[h] = false;

  bool degrees = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    degrees = degrees && (in_l[v] ? g.degree(v) >= s + 2 : g.degree(v) == s);
  }
  bool matched = true;
  for (auto u : hubs) {
    const auto hub_nbrs = intersect(g.neighbors(u), in_l);
    if (hub_nbrs.size() != 1) {
      matched = false;
      continue;
    }
    const Vertex v = hub_nbrs.front();
    const auto su = intersect(g.neighbors(u), in_s);
    const auto sv = intersect(g.neighbors(v), in_s);
    for (auto a : su) {
      if (g.has_edge(a, v)) matched = false;
      for (auto b : sv) matched = matched && !g.has_edge(a, b);
    }
    for (auto b : sv) matched = matched && !g.has_edge(b, u);
  }
  bool independent = true;
  for (auto h : hubs) {
    const auto nbhd = intersect(g.neighbors(h), in_s);
    for (auto w : nbhd) independent = independent && in_independent_set_of_size(g, nbhd, w, s + 1);
  }
  std::vector<Vertex> unattached;
  std::size_t two = 0;
  bool at_most_two = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_l[v]) continue;
    const auto count = intersect(g.neighbors(v), in_l).size();
    if (count == 0) unattached.push_back(v);
    if (count == 2) ++two;
    if (count > 2) at_most_two = false;
  }
  const bool spare_clique = unattached.size() == s + 1 && is_clique(g, unattached) &&
                            unattached == vertices_with(roles, Role::clique);
  return {{"degrees", degrees},
          {"hubs-matched-and-separated", matched},
          {"hub-neighborhoods-independent", independent},
          {"spare-clique-and-single-two-hub-vertex", spare_clique && two <= 1 && at_most_two}};
}

}  // namespace satnum
