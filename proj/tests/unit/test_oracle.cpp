#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "naive.hpp"
#include "satnum/bounds.hpp"
#include "satnum/canonical.hpp"
#include "satnum/constructions.hpp"
#include "satnum/embedding.hpp"
#include "satnum/enumerate.hpp"
#include "satnum/generators.hpp"
#include "satnum/io.hpp"
#include "satnum/oracle.hpp"
#include "satnum/saturation.hpp"
#include "test_util.hpp"

using namespace satnum;

namespace {

Graph paw() { return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

std::size_t total_classes(std::size_t n) {
  std::size_t total = 0;
  EdgeLevelEnumerator levels(n);
  do {
    total += levels.level().size();
  } while (levels.advance());
  return total;
}

}  // namespace

TEST(CanonicalForm, RelabelingInvariant) {
  std::mt19937 rng(71);
  const auto p3 = gen::path(3);
  EXPECT_EQ(canonical_form(p3), canonical_form(relabel(p3, std::vector<Vertex>{2, 0, 1})));
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 9;
    const auto g = naive::random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto f = canonical_form(g);
    EXPECT_EQ(f, canonical_form(relabel(g, perm)));
    EXPECT_TRUE(are_isomorphic(f.to_graph(), g));
    EXPECT_EQ(canonical_form(f.to_graph()), f);
    EXPECT_EQ(f.bytes(), io::emit_graph6(f.to_graph()));
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphic) {
  EXPECT_NE(canonical_form(gen::path(4)), canonical_form(gen::star(3)));
  EXPECT_NE(canonical_form(gen::cycle(6)),
            canonical_form(disjoint_union(gen::clique(3), gen::clique(3))));
  EXPECT_THROW_WITH(canonical_form(gen::empty(10)), GraphError, "9");
}

TEST(Enumerate, SmallLevels) {
  EXPECT_EQ(enumerate_graphs(4, 3).size(), 3u);
  EXPECT_EQ(enumerate_graphs(3, 3).size(), 1u);
  EXPECT_EQ(enumerate_graphs(5, 0).size(), 1u);
  EXPECT_EQ(enumerate_graphs(4, 7).size(), 0u);
}

// Independent count: minimum adjacency code over all n! labelings.
TEST(Enumerate, AgreesWithPermutationCount) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(total_classes(n), naive::count_classes(n)) << n;
}

TEST(Enumerate, SevenVertices) { EXPECT_EQ(total_classes(7), 1044u); }

TEST(Enumerate, LevelsAreSortedAndSized) {
  EdgeLevelEnumerator levels(6);
  do {
    const auto& lv = levels.level();
    EXPECT_TRUE(std::is_sorted(lv.begin(), lv.end()));
    EXPECT_EQ(std::adjacent_find(lv.begin(), lv.end()), lv.end());
    for (const auto& f : lv) EXPECT_EQ(f.to_graph().size(), levels.edges());
  } while (levels.advance());
  // Stepping past K_6 leaves an empty level.
  EXPECT_EQ(levels.edges(), 16u);
  EXPECT_TRUE(levels.level().empty());
}

TEST(BruteForceSat, Examples) {
  const auto k3 = brute_force_sat(5, gen::clique(3));
  EXPECT_EQ(k3.sat_value, 4u);
  ASSERT_EQ(k3.witnesses.size(), 1u);
  EXPECT_TRUE(are_isomorphic(k3.witnesses.front(), gen::star(4)));

  const auto p3_6 = brute_force_sat(6, gen::path(3));
  EXPECT_EQ(p3_6.sat_value, 3u);
  const auto matching = Graph::from_edge_list(6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(std::any_of(p3_6.witnesses.begin(), p3_6.witnesses.end(),
                          [&](const Graph& w) { return are_isomorphic(w, matching); }));

  const auto p3_7 = brute_force_sat(7, gen::path(3));
  EXPECT_EQ(p3_7.sat_value, 3u);
  EXPECT_EQ(p3_7.start_edges, 3u);
}

TEST(BruteForceSat, WitnessesAreSaturatedAndMinimal) {
  for (const auto& h : {gen::path(4), gen::cycle(4), double_star(2, 3), paw()}) {
    const auto r = brute_force_sat(7, h, {std::nullopt, true, 1});
    EXPECT_EQ(r.start_edges, 0u);
    ASSERT_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      EXPECT_EQ(w.size(), r.sat_value);
      EXPECT_TRUE(is_h_saturated(w, h).is_saturated);
    }
  }
}

TEST(BruteForceSat, AgreesWithLabeledScan) {
  const std::vector<Graph> patterns{gen::path(3), gen::path(4), gen::star(3), gen::clique(3),
                                    gen::cycle(4), paw()};
  for (const auto& h : patterns) {
    for (std::size_t n = h.order(); n <= 6; ++n) {
      EXPECT_EQ(brute_force_sat(n, h, {std::nullopt, true, 1}).sat_value,
                naive::sat_by_labeled_scan(n, naive::adjacency(h)))
          << io::emit_graph6(h) << " n=" << n;
    }
  }
}

TEST(BruteForceSat, ThreadCountDoesNotMatter) {
  for (const auto& h : {gen::path(4), double_star(2, 3)}) {
    const auto one = brute_force_sat(7, h, {std::nullopt, true, 1});
    const auto four = brute_force_sat(7, h, {std::nullopt, true, 4});
    EXPECT_EQ(one.sat_value, four.sat_value);
    EXPECT_EQ(one.witnesses, four.witnesses);
  }
}

TEST(BruteForceSat, StartsAtLowerBound) {
  const auto r = brute_force_sat(7, gen::clique(3));
  EXPECT_EQ(static_cast<std::int64_t>(r.start_edges), *best_lower_bound(gen::clique(3), 7).integer_value());
  EXPECT_EQ(r.sat_value, 6u);
}

TEST(BruteForceSat, Errors) {
  EXPECT_THROW(brute_force_sat(10, gen::path(3)), std::invalid_argument);
  EXPECT_THROW(brute_force_sat(2, gen::path(3)), std::invalid_argument);
  EXPECT_THROW_WITH(brute_force_sat(7, gen::clique(3), {3, false, 1}), OracleError, "");
}

TEST(BruteForceSat, IsolatedEdgePatternStartsAtZero) {
  const auto h = disjoint_union(gen::clique(2), gen::path(3));
  const auto r = brute_force_sat(6, h);
  EXPECT_EQ(r.start_edges, 0u);
  EXPECT_EQ(r.sat_value, naive::sat_by_labeled_scan(6, naive::adjacency(h)));
}

TEST(BoundAudit, TriangleAndDoubleStar) {
  const auto audit = audit_bounds_against_oracle({gen::clique(3), double_star(2, 3)}, 7);
  EXPECT_TRUE(audit.violations.empty());
  for (const auto& e : audit.entries) {
    if (e.pattern_index == 0) {
      EXPECT_EQ(e.sat_value, e.n - 1);
    }
    ASSERT_TRUE(e.best_lower.has_value());
    EXPECT_LE(*e.best_lower, static_cast<std::int64_t>(e.sat_value));
  }
}
