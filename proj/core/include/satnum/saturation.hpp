#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satnum/embedding.hpp"
#include "satnum/graph.hpp"
#include "satnum/rational.hpp"
#include "satnum/weights.hpp"

namespace satnum {

struct SaturationVerdict {
  bool is_free{false};
  bool is_saturated{false};
  std::optional<Embedding> free_witness;          // a copy of H in G
  std::optional<Edge> maximality_counterexample;  // lowest non-edge whose addition creates no H
};

struct SaturationOptions {
  /// Worker threads for the non-edge sweep; 0 means hardware concurrency.
  unsigned threads{1};
  /// Skip anchored orientations whose endpoint degrees in G + xy are
  /// already too small. Off for audit runs.
  bool degree_prefilter{true};
};

bool is_h_free(const Graph& g, const Graph& h);

/// Decides H-saturation. The maximality sweep tests each non-edge xy of G
/// with anchored searches only (every copy of H in G + xy uses xy). The
/// reported counterexample is the lowest failing non-edge regardless of
/// the thread count.
SaturationVerdict is_h_saturated(const Graph& g, const Graph& h,
                                 const SaturationOptions& options = {});

/// Same, reusing a prepared search for H.
SaturationVerdict is_h_saturated(const Graph& g, const EmbeddingSearch& search,
                                 const SaturationOptions& options = {});

struct PropertyPResult {
  bool holds{true};
  std::optional<Edge> counterexample;  // lowest failing pair
};

/// For every nonadjacent pair x, y with d(x), d(y) <= k0: some z in N(x) has
/// |N(z) - (N(x) + y)| >= k1p, or some z in N(y) has |N(z) - (N(y) + x)| >= k1p.
PropertyPResult satisfies_property_p(const Graph& g, unsigned k0, unsigned k1p);

struct NamedCheck {
  std::string name;
  bool passed{false};
  std::vector<Vertex> members;  // the vertex set that must be a clique
};

/// Evaluates the clique predicates for an H-saturated graph g:
///   low-degree-clique         {v : d(v) < k0}
///   no-k1-neighbor-clique     {v : no neighbor of degree >= k1}
///   low-no-k1p-neighbor-clique {v : d(v) <= k0, no neighbor of degree >= k1p}
///   triangle-free-clique      low-degree v with no high-degree neighbor, or
///                             one high-degree neighbor w, d(w) = k1p and
///                             N(v) & N(w) nonempty (only when triangle_free
///                             and k0 < k1p)
std::vector<NamedCheck> check_clique_propositions(const Graph& g, const WeightSummary& summary,
                                                  bool triangle_free);

/// S = {d <= k0}, M = {k0 < d < k1p}, and the high-degree vertices split
/// into L and XL. Strict: L = {d = k1p}, XL = {d > k1p}. Otherwise
/// L = {d >= k1p} and XL is empty. clique_A holds the vertices of S with
/// degree < k0, clique_B those of S with no neighbor in L or XL.
struct DegreePartition {
  std::vector<Vertex> S, M, L, XL;
  std::optional<Rational> d_L, d_XL;  // absent for empty sets
  std::vector<Vertex> clique_A, clique_B;
};

DegreePartition degree_partition(const Graph& g, unsigned k0, unsigned k1p,
                                 bool xl_threshold_strict);

}  // namespace satnum
