#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "naive.hpp"
#include "satnum/bounds.hpp"
#include "satnum/constructions.hpp"
#include "satnum/generators.hpp"
#include "test_util.hpp"

using namespace satnum;

namespace {

Graph triangle_with_pendant() {
  return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

const BoundReport& by_name(const std::vector<BoundReport>& reports, const std::string& name) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const BoundReport& r) { return r.name == name; });
  if (it == reports.end()) throw std::runtime_error("missing report " + name);
  return *it;
}

}  // namespace

TEST(CpBound, Slopes) {
  EXPECT_EQ(cp_lower_bound(weight_summary(triangle_with_pendant()), 10).slope, Rational(2));
  const auto ds = weight_summary(double_star(4, 5));
  const auto r = cp_lower_bound(ds, 10);
  EXPECT_EQ(r.slope, Rational(ds.k0));
  EXPECT_TRUE(r.asymptotic_only);
  EXPECT_FALSE(r.constant.has_value());
}

TEST(CpBound, TriangleFreeSlopeIsK0) {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto h = naive::random_graph(7, 0.35, rng);
    if (h.size() == 0 || has_isolated_edge(h) || !is_triangle_free(h)) continue;
    const auto s = weight_summary(h);
    EXPECT_EQ(cp_lower_bound(s, 20).slope, Rational(s.k0));
  }
}

TEST(GeneralBound, TriangleWithPendantUsesCaseC) {
  const auto s = weight_summary(triangle_with_pendant());
  EXPECT_EQ(s.k0, 1u);
  EXPECT_EQ(s.k1, 2u);
  EXPECT_EQ(s.k1p, 3u);
  const auto reports = general_lower_bound(s, 20);
  const auto& c = by_name(reports, "general-c");
  ASSERT_TRUE(c.applicable);
  EXPECT_EQ(c.slope, Rational(5, 3));
  EXPECT_EQ(best_lower_bound(triangle_with_pendant(), 200).name, "general-c");
}

TEST(GeneralBound, PathThreeUsesCaseA) {
  const auto reports = general_lower_bound(weight_summary(gen::path(3)), 6);
  const auto& a = by_name(reports, "general-a");
  ASSERT_TRUE(a.applicable);
  EXPECT_EQ(a.slope, Rational(1));
  EXPECT_EQ(*a.constant, Rational(1, 2));
  EXPECT_EQ(*a.value, Rational(5, 2));
  EXPECT_FALSE(by_name(reports, "general-b").applicable);
}

TEST(GeneralBound, DoubleStarCaseB) {
  const auto reports = general_lower_bound(weight_summary(double_star(4, 5)), 18);
  const auto& b = by_name(reports, "general-b");
  ASSERT_TRUE(b.applicable);
  EXPECT_EQ(b.slope, Rational(10, 3));
  EXPECT_EQ(*b.constant, Rational(8, 3));
}

TEST(GeneralBound, ReportsEveryCase) {
  const auto reports = general_lower_bound(weight_summary(gen::clique(4)), 10);
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) {
    if (!r.applicable) {
      EXPECT_FALSE(r.value.has_value());
      EXPECT_FALSE(r.reason.empty());
    }
  }
}

TEST(TriangleFreeBound, DoubleStarPart1) {
  const auto reports = triangle_free_lower_bound(weight_summary(double_star(4, 5)), true, 18);
  const auto& p1 = by_name(reports, "triangle-free-part1");
  ASSERT_TRUE(p1.applicable);
  EXPECT_EQ(p1.slope, Rational(24, 7));
  EXPECT_EQ(*p1.constant, Rational(20, 7));
  EXPECT_EQ(*p1.value, Rational(28));
}

TEST(TriangleFreeBound, CaterpillarCorollary) {
  const auto reports = triangle_free_lower_bound(weight_summary(caterpillar_p5(1)), true, 19);
  const auto& c = by_name(reports, "triangle-free-corollary");
  ASSERT_TRUE(c.applicable);
  EXPECT_EQ(c.slope, Rational(12, 5));
  EXPECT_EQ(*c.constant, Rational(7, 10) + Rational(9, 8));
  EXPECT_EQ(*c.value, Rational(839, 40));
  EXPECT_EQ(c.integer_value(), 21);
}

TEST(TriangleFreeBound, StarIsGated) {
  const auto reports = triangle_free_lower_bound(weight_summary(gen::star(3)), true, 10);
  const auto& p1 = by_name(reports, "triangle-free-part1");
  EXPECT_FALSE(p1.applicable);
  EXPECT_NE(p1.reason.find("k1' <= k0"), std::string::npos);
  for (const auto& r : triangle_free_lower_bound(weight_summary(gen::clique(3)), false, 10)) {
    EXPECT_FALSE(r.applicable);
  }
}

TEST(DoubleStarBounds, FigureTwoOrder) {
  const auto reports = double_star_bounds(4, 5, 18);
  EXPECT_EQ(*by_name(reports, "double-star-lower").value, Rational(28));
  const auto& cor = by_name(reports, "double-star-corollary");
  EXPECT_EQ(*cor.value, Rational(30));
  EXPECT_EQ(cor.kind, BoundKind::exact);
  EXPECT_TRUE(cor.asymptotic_only);
  const auto& up = by_name(reports, "double-star-upper");
  EXPECT_GE(*up.value, Rational(30));
}

TEST(DoubleStarBounds, Errors) {
  EXPECT_THROW_WITH(double_star_bounds(5, 5, 100), BoundError, "s >= t");
  EXPECT_THROW_WITH(double_star_bounds(4, 5, 17), BoundError, "below the threshold");
}

TEST(DoubleStarBounds, LowerNeverExceedsUpper) {
  for (unsigned t = 2; t <= 8; ++t) {
    for (unsigned s = 1; s < t; ++s) {
      for (std::size_t n = double_star_threshold(s, t); n < double_star_threshold(s, t) + 60; ++n) {
        const auto r = double_star_bounds(s, t, n);
        EXPECT_LE(*by_name(r, "double-star-lower").value, *by_name(r, "double-star-corollary").value);
        EXPECT_LE(*by_name(r, "double-star-corollary").value, *by_name(r, "double-star-upper").value);
      }
    }
  }
}

TEST(ShortyBounds, FigureThreeOrder) {
  const auto reports = shorty_bounds(2, 19);
  EXPECT_EQ(*by_name(reports, "shorty-upper").value, Rational(101, 4));
  EXPECT_EQ(*by_name(reports, "shorty-lower").value, Rational(839, 40));
  EXPECT_LE(Rational(23), *by_name(reports, "shorty-upper").value);
  EXPECT_THROW_WITH(shorty_bounds(1, 8), BoundError, "below the threshold");
}

TEST(Warmup, Values) {
  EXPECT_EQ(warmup_min_avg_degree(3, 5, false), Rational(10, 3));
  EXPECT_EQ(warmup_min_avg_degree(3, 5, true), Rational(17, 5));
  EXPECT_EQ(warmup_min_avg_degree(1, 2, false), Rational(4, 3));
  EXPECT_THROW_WITH(warmup_min_avg_degree(5, 5, false), BoundError, "smaller than k");
}

TEST(Ehm, Values) {
  EXPECT_EQ(ehm_saturation_number(2, 5), 4u);
  EXPECT_EQ(ehm_saturation_number(2, 4), 3u);
  EXPECT_EQ(ehm_saturation_number(3, 5), 7u);
  EXPECT_THROW(ehm_saturation_number(1, 5), BoundError);
}

TEST(BestLowerBound, Examples) {
  const auto ds = best_lower_bound(double_star(4, 5), 18);
  EXPECT_EQ(ds.name, "triangle-free-part1");
  EXPECT_EQ(*ds.value, Rational(28));
  const auto p3 = best_lower_bound(gen::path(3), 7);
  EXPECT_EQ(p3.name, "general-a");
  EXPECT_EQ(*p3.value, Rational(3));
  EXPECT_THROW_WITH(best_lower_bound(gen::path(5), 4), BoundError, "smaller");
  EXPECT_THROW(best_lower_bound(gen::clique(2), 4), PatternError);
}

// The general family always yields something, and the best bound is the
// maximum over every applicable explicit report.
TEST(BestLowerBound, IsMaximumOfApplicable) {
  std::mt19937 rng(29);
  for (int i = 0; i < 300; ++i) {
    const auto h = naive::random_graph(6, 0.45, rng);
    if (h.size() == 0 || has_isolated_edge(h)) continue;
    const auto s = weight_summary(h);
    auto all = general_lower_bound(s, 12);
    const auto tf = triangle_free_lower_bound(s, is_triangle_free(h), 12);
    all.insert(all.end(), tf.begin(), tf.end());
    const auto best = best_lower_bound(h, 12);
    ASSERT_TRUE(best.applicable);
    for (const auto& r : all) {
      if (r.applicable) {
        EXPECT_LE(*r.value, *best.value);
      }
    }
  }
}
