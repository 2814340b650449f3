#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "satnum/graph.hpp"

namespace satnum {

/// Largest order accepted by canonical_form and the enumerator.
inline constexpr std::size_t kMaxCanonicalOrder = 9;

/// Isomorphism-class key for graphs of order <= 9.
///
/// `bits` is the upper triangle of the canonically relabeled adjacency
/// matrix, pairs (0,1), (0,2), ..., (n-2,n-1) from the most significant
/// position down. The canonical labeling is the one minimizing this value
/// over all labelings reachable by refinement and individualization.
struct CanonicalForm {
  std::uint8_t order{0};
  std::uint64_t bits{0};

  /// The canonically labeled representative.
  Graph to_graph() const;

  /// graph6 encoding of the canonical representative.
  std::string bytes() const;

  friend constexpr auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws GraphError when g.order() > kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits * 31 + f.order);
  }
};

}  // namespace satnum
