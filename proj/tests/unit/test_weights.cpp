#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "satnum/constructions.hpp"
#include "satnum/enumerate.hpp"
#include "satnum/generators.hpp"
#include "satnum/weights.hpp"
#include "test_util.hpp"

using namespace satnum;

namespace {

Graph triangle_with_pendant() {
  // Triangle a=0, b=1, c=2 with a pendant vertex 3 at a.
  return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

void expect_matches_naive(const Graph& h) {
  const auto s = weight_summary(h);
  const auto ref = naive::weights(naive::adjacency(h));
  EXPECT_EQ(s.k0, ref.k0);
  EXPECT_EQ(s.k1, ref.k1);
  EXPECT_EQ(s.k0p, ref.k0p);
  EXPECT_EQ(s.k1p, ref.k1p);
  EXPECT_EQ(s.min_wt_cp, ref.min_cp);
}

}  // namespace

TEST(WtCp, Examples) {
  EXPECT_EQ(wt_cp(gen::clique(2), {0, 1}), 0u);
  EXPECT_EQ(wt_cp(triangle_with_pendant(), {1, 2}), 2u);
  EXPECT_THROW_WITH(wt_cp(gen::path(3), {0, 2}), GraphError, "not an edge");
}

TEST(WtCp, EqualsWt0OnTriangleFreePatterns) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto h = naive::random_graph(8, 0.3, rng);
    if (!is_triangle_free(h)) continue;
    for (const auto& e : h.edges()) {
      EXPECT_EQ(wt_cp(h, e), wt0(h, e));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Wt0Wt1, DoubleStarEdges) {
  const auto ds = double_star(4, 5);
  // Vertex 2 is a leaf of the degree-4 center 0.
  EXPECT_EQ(wt0(ds, {0, 2}), 3u);
  EXPECT_EQ(wt1(ds, {0, 2}), 5u);
  EXPECT_EQ(wt0(ds, {0, 1}), 4u);
  EXPECT_EQ(wt1(ds, {0, 1}), 1u);
  EXPECT_EQ(wt0(gen::clique(2), {0, 1}), 0u);
  EXPECT_FALSE(wt1(gen::clique(2), {0, 1}).has_value());
}

TEST(WeightSummary, DoubleStars) {
  for (unsigned t = 3; t <= 8; ++t) {
    for (unsigned s = 2; s < t; ++s) {
      const auto w = weight_summary(double_star(s, t));
      EXPECT_EQ(w.k0, s - 1);
      EXPECT_EQ(w.k1, 1u);
      EXPECT_EQ(w.k0p, t - 1);
      EXPECT_EQ(w.k1p, t);
    }
  }
}

TEST(WeightSummary, Caterpillars) {
  for (unsigned s = 1; s <= 5; ++s) {
    const auto h = caterpillar_p5(s);
    for (const auto& e : h.edges()) {
      EXPECT_EQ(wt0(h, e), s + 1);
      EXPECT_EQ(wt1(h, e), s + 2);
    }
    const auto w = weight_summary(h);
    EXPECT_EQ(w.k0, s + 1);
    EXPECT_EQ(w.k0p, s + 1);
    EXPECT_EQ(w.k1, s + 2);
    EXPECT_EQ(w.k1p, s + 2);
  }
}

TEST(WeightSummary, PathThree) {
  const auto w = weight_summary(gen::path(3));
  EXPECT_EQ(w.k0, 1u);
  EXPECT_EQ(w.k1, 1u);
  EXPECT_EQ(w.k0p, 1u);
  EXPECT_EQ(w.k1p, 1u);
}

TEST(WeightSummary, Errors) {
  EXPECT_THROW_WITH(weight_summary(gen::empty(3)), PatternError, "no edges");
  EXPECT_THROW_WITH(weight_summary(gen::clique(2)), PatternError, "isolated edge");
}

TEST(WeightSummary, WitnessesAttainMinima) {
  const auto h = double_star(3, 6);
  const auto s = weight_summary(h);
  EXPECT_EQ(wt0(h, s.witnesses.k0), s.k0);
  EXPECT_EQ(wt1(h, s.witnesses.k1), s.k1);
  EXPECT_EQ(wt0(h, s.witnesses.k0p), s.k0p);
  EXPECT_EQ(wt1(h, s.witnesses.k0p), s.k1);
  EXPECT_EQ(wt1(h, s.witnesses.k1p), s.k1p);
  EXPECT_EQ(wt0(h, s.witnesses.k1p), s.k0);
  EXPECT_EQ(wt_cp(h, s.witnesses.min_wt_cp), s.min_wt_cp);
}

TEST(HasIsolatedEdge, Examples) {
  EXPECT_TRUE(has_isolated_edge(gen::clique(2)));
  EXPECT_FALSE(has_isolated_edge(gen::path(3)));
  EXPECT_TRUE(has_isolated_edge(disjoint_union(gen::clique(2), gen::clique(3))));
}

// Invariants over every pattern class on up to 7 vertices (and random
// graphs on 8 to 10 vertices): k0 <= k0', k1 <= k1', the two inequalities
// are strict together, and the values agree with the naive oracle.
TEST(WeightSummary, InvariantsExhaustive) {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    EdgeLevelEnumerator levels(n);
    while (levels.advance()) {
      for (const auto& form : levels.level()) {
        const auto h = form.to_graph();
        if (has_isolated_edge(h)) continue;
        const auto s = weight_summary(h);
        EXPECT_LE(s.k0, s.k0p);
        EXPECT_LE(s.k1, s.k1p);
        EXPECT_EQ(s.k0 < s.k0p, s.k1 < s.k1p) << form.bytes();
        expect_matches_naive(h);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(WeightSummary, InvariantsRandomLarger) {
  std::mt19937 rng(17);
  for (std::size_t n = 8; n <= 10; ++n) {
    for (int i = 0; i < 300; ++i) {
      const auto h = naive::random_graph(n, 0.35, rng);
      if (h.size() == 0 || has_isolated_edge(h)) continue;
      const auto s = weight_summary(h);
      EXPECT_EQ(s.k0 < s.k0p, s.k1 < s.k1p);
      expect_matches_naive(h);
    }
  }
}
