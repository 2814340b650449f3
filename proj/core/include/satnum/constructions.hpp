#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satnum/graph.hpp"
#include "satnum/rational.hpp"

namespace satnum {

/// Raised for parameters outside a construction's hypotheses and for
/// outputs that fail their own structural audit.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Role {
  hub,        // high-degree vertex (L)
  leaf,       // low-degree vertex attached to a hub (S)
  clique,     // the spare clique (B)
  remainder,  // absorbed remainder vertex (R)
  special,    // the odd-remainder vertex v
};

const char* to_string(Role role) noexcept;

struct RoleLabel {
  Role role{Role::leaf};
  std::optional<unsigned> class_index;  // hub index for hubs and their leaves
  std::optional<unsigned> partner;      // partner hub, where hubs are matched

  friend bool operator==(const RoleLabel&, const RoleLabel&) = default;
};

struct PropertyCheck {
  std::string name;
  bool passed{false};
};

struct ConstructionReport {
  Graph graph;
  std::uint64_t expected_size{0};
  std::vector<RoleLabel> roles;  // one per vertex
  std::vector<PropertyCheck> properties_checked;

  bool all_passed() const;
};

/// S_{s,t}: center 0 of degree s, center 1 of degree t, then the s-1 leaves
/// of center 0, then the t-1 leaves of center 1.
Graph double_star(unsigned s, unsigned t);

/// P_5^s: spine 0-1-2-3-4, then s pendant leaves on 1, on 2 and on 3.
Graph caterpillar_p5(unsigned s);

/// Returns (s, t) with s <= t when h is a double star. Stars K_{1,t}
/// report (1, t).
std::optional<std::pair<unsigned, unsigned>> recognize_double_star(const Graph& h);

/// Returns s when h is isomorphic to P_5^s.
std::optional<unsigned> recognize_caterpillar_p5(const Graph& h);

/// Exact size of the S_{s,t}-saturated construction on n vertices.
Rational double_star_construction_size(unsigned s, unsigned t, std::size_t n);

/// Exact size of the P_5^{s-1}-saturated construction on n vertices.
Rational shorty_construction_size(unsigned s, std::size_t n);

/// S_{s,t}-saturated graph for 2 <= s < t and n >= the threshold.
///
/// Layout: 2p hubs, their leaf classes (class i belongs to hub i), the
/// remainder block, and the clique B on the highest indices. Classes 2j and
/// 2j+1 carry an (s-2)-regular cyclic bipartite graph.
ConstructionReport saturated_double_star(unsigned s, unsigned t, std::size_t n);

/// P_5^{s-1}-saturated graph for s >= 1 and n >= the threshold. Hubs 2j and
/// 2j+1 are partners; leaf classes of non-partner hubs carry
/// (s-1)-regular cyclic bipartite graphs.
ConstructionReport saturated_shorty(unsigned s, std::size_t n);

/// l copies of K_{1,k} with a (delta-1)-regular graph on the leaves.
ConstructionReport example_kdelta_star(unsigned delta, unsigned k, unsigned ell);

/// l copies of S_{k,k} with a (delta-1)-regular graph on the leaves.
ConstructionReport example_kdelta_doublestar(unsigned delta, unsigned k, unsigned ell);

/// Complete t-partite graph with t-1 singleton parts (vertices 0..t-2) and
/// one part of order n-t+1.
ConstructionReport ehm_construction(unsigned t, std::size_t n);

/// The fixed 10-vertex gadget with property P for k0 = 2, k1' = 3 that is
/// not P_5^1-saturated. Vertex order: z, z', h2, h3, l0, l1, x, y, l20, l30.
Graph fig4_gadget();
std::map<Vertex, std::string> fig4_labels();

/// Literal structural conditions of the saturation constructions, checked
/// on a graph and its role labels.
std::vector<PropertyCheck> audit_double_star(const Graph& g, const std::vector<RoleLabel>& roles,
                                             unsigned s, unsigned t);
std::vector<PropertyCheck> audit_shorty(const Graph& g, const std::vector<RoleLabel>& roles,
                                        unsigned s);

/// True when some independent set of the given cardinality inside `within`
/// contains w.
bool in_independent_set_of_size(const Graph& g, const std::vector<Vertex>& within, Vertex w,
                                std::size_t size);

}  // namespace satnum
