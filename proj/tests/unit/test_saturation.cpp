#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "satnum/constructions.hpp"
#include "satnum/generators.hpp"
#include "satnum/saturation.hpp"

using namespace satnum;

namespace {

const NamedCheck& check_named(const std::vector<NamedCheck>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

// Lowest non-edge whose addition creates no copy of h, by the naive search.
std::optional<Edge> naive_counterexample(const Graph& g, const Graph& h) {
  const auto hadj = naive::adjacency(h);
  for (const auto& [x, y] : non_edges(g)) {
    if (!naive::contains(naive::adjacency(add_edge(g, x, y)), hadj)) return Edge{x, y};
  }
  return std::nullopt;
}

}  // namespace

TEST(IsHFree, Examples) {
  EXPECT_TRUE(is_h_free(gen::star(4), gen::clique(3)));
  EXPECT_FALSE(is_h_free(gen::cycle(5), gen::path(4)));
  // Derived golden: the gadget contains no P_5^1.
  EXPECT_TRUE(is_h_free(fig4_gadget(), caterpillar_p5(1)));
}

TEST(IsHSaturated, StarIsTriangleSaturated) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto v = is_h_saturated(gen::star(n - 1), gen::clique(3));
    EXPECT_TRUE(v.is_free);
    EXPECT_TRUE(v.is_saturated) << n;
    EXPECT_FALSE(v.maximality_counterexample.has_value());
  }
}

TEST(IsHSaturated, GadgetIsNotSaturated) {
  const auto v = is_h_saturated(fig4_gadget(), caterpillar_p5(1));
  EXPECT_TRUE(v.is_free);
  EXPECT_FALSE(v.is_saturated);
  ASSERT_TRUE(v.maximality_counterexample.has_value());
  EXPECT_EQ(v.maximality_counterexample, naive_counterexample(fig4_gadget(), caterpillar_p5(1)));
}

TEST(IsHSaturated, FigureThreeConstruction) {
  const auto v = is_h_saturated(saturated_shorty(2, 19).graph, caterpillar_p5(1));
  EXPECT_TRUE(v.is_free);
  EXPECT_TRUE(v.is_saturated);
}

TEST(IsHSaturated, NotFreeReportsWitness) {
  const auto v = is_h_saturated(gen::clique(4), gen::clique(3));
  EXPECT_FALSE(v.is_free);
  EXPECT_FALSE(v.is_saturated);
  ASSERT_TRUE(v.free_witness.has_value());
  EXPECT_TRUE(is_valid_embedding(gen::clique(4), gen::clique(3), *v.free_witness));
}

TEST(IsHSaturated, AgreesWithNaive) {
  std::mt19937 rng(59);
  const std::vector<Graph> patterns{gen::path(3),     gen::path(4),      gen::star(3),
                                    gen::clique(3),   gen::cycle(4),     double_star(2, 3),
                                    gen::path(5),     gen::cycle(5),     gen::star(4)};
  for (int i = 0; i < 250; ++i) {
    const std::size_t n = 4 + i % 4;
    const auto g = naive::random_graph(n, 0.15 + 0.1 * (i % 4), rng);
    const auto gadj = naive::adjacency(g);
    for (const auto& h : patterns) {
      const auto v = is_h_saturated(g, h);
      const auto hadj = naive::adjacency(h);
      EXPECT_EQ(v.is_free, !naive::contains(gadj, hadj));
      EXPECT_EQ(v.is_saturated, naive::is_saturated(gadj, hadj));
      if (v.is_free) {
        EXPECT_EQ(v.maximality_counterexample, naive_counterexample(g, h));
      }
    }
  }
}

TEST(IsHSaturated, ThreadsAndPrefilterDoNotChangeVerdict) {
  std::mt19937 rng(61);
  const auto h = double_star(2, 3);
  const EmbeddingSearch search(h);
  for (int i = 0; i < 60; ++i) {
    const auto g = naive::random_graph(12, 0.15, rng);
    const auto base = is_h_saturated(g, search);
    for (unsigned threads : {2U, 4U, 0U}) {
      for (bool prefilter : {true, false}) {
        const auto v = is_h_saturated(g, search, {threads, prefilter});
        EXPECT_EQ(v.is_free, base.is_free);
        EXPECT_EQ(v.is_saturated, base.is_saturated);
        EXPECT_EQ(v.maximality_counterexample, base.maximality_counterexample);
      }
    }
  }
}

TEST(PropertyP, Examples) {
  EXPECT_TRUE(satisfies_property_p(fig4_gadget(), 2, 3).holds);
  const auto fig1a = example_kdelta_star(3, 5, 2).graph;
  const auto r = satisfies_property_p(fig1a, 3, 5);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.counterexample.has_value());
  EXPECT_TRUE(satisfies_property_p(gen::clique(6), 5, 9).holds);
}

TEST(CliquePropositions, StarAgainstTriangle) {
  const auto summary = weight_summary(gen::clique(3));
  EXPECT_EQ(summary.k0, 1u);
  EXPECT_EQ(summary.k1, 2u);
  EXPECT_EQ(summary.k1p, 2u);
  for (const auto& c : check_clique_propositions(ehm_construction(2, 6).graph, summary, false)) {
    EXPECT_TRUE(c.passed) << c.name;
  }
}

TEST(CliquePropositions, HaveTeeth) {
  const auto checks =
      check_clique_propositions(gen::empty(2), weight_summary(gen::clique(3)), false);
  const auto& low = check_named(checks, "low-degree-clique");
  EXPECT_FALSE(low.passed);
  EXPECT_EQ(low.members, (std::vector<Vertex>{0, 1}));
}

TEST(CliquePropositions, TriangleFreeCheckOnlyWhenRequested) {
  const auto h = double_star(4, 5);
  const auto g = saturated_double_star(4, 5, 18).graph;
  const auto summary = weight_summary(h);
  const auto with = check_clique_propositions(g, summary, true);
  const auto without = check_clique_propositions(g, summary, false);
  EXPECT_EQ(with.size(), without.size() + 1);
  for (const auto& c : with) EXPECT_TRUE(c.passed) << c.name;
}

TEST(DegreePartition, FigureTwo) {
  const auto g = saturated_double_star(4, 5, 18).graph;
  const auto loose = degree_partition(g, 3, 5, false);
  EXPECT_EQ(loose.S.size(), 16u);
  EXPECT_EQ(loose.L.size(), 2u);
  EXPECT_TRUE(loose.XL.empty());
  EXPECT_EQ(loose.d_L, Rational(6));
  const auto strict = degree_partition(g, 3, 5, true);
  EXPECT_TRUE(strict.L.empty());
  EXPECT_EQ(strict.XL.size(), 2u);
  EXPECT_EQ(strict.d_XL, Rational(6));
  EXPECT_FALSE(strict.d_L.has_value());
}

TEST(DegreePartition, FigureOneB) {
  const auto g = example_kdelta_doublestar(3, 5, 2).graph;
  const auto p = degree_partition(g, 3, 5, true);
  EXPECT_EQ(p.L.size(), 4u);
  EXPECT_EQ(p.d_L, Rational(5));
  EXPECT_TRUE(p.XL.empty());
  EXPECT_EQ(p.S.size(), 16u);
}

TEST(DegreePartition, RegularGraph) {
  const auto p = degree_partition(gen::cycle(7), 2, 4, true);
  EXPECT_EQ(p.S.size(), 7u);
  EXPECT_TRUE(p.M.empty());
  EXPECT_TRUE(p.L.empty());
  EXPECT_TRUE(p.XL.empty());
}

TEST(DegreePartition, PartitionsVertices) {
  std::mt19937 rng(67);
  for (int i = 0; i < 100; ++i) {
    const auto g = naive::random_graph(15, 0.3, rng);
    const auto p = degree_partition(g, 3, 5, i % 2 == 0);
    EXPECT_EQ(p.S.size() + p.M.size() + p.L.size() + p.XL.size(), g.order());
    for (auto v : p.clique_A) EXPECT_LT(g.degree(v), 3u);
  }
}
