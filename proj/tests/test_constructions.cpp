#include <gtest/gtest.h>

#include <algorithm>

#include "kipas/constructions.hpp"
#include "kipas/errors.hpp"
#include "kipas/formulas.hpp"
#include "kipas/patterns.hpp"
#include "kipas/structure.hpp"

using namespace kipas;

namespace {

std::vector<int> part_sizes(const FamilyDescriptor& d) {
  std::vector<int> s;
  for (const auto& p : d.parts) s.push_back(static_cast<int>(p.size()));
  return s;
}

bool mono_free(const EdgeColoring& g, const PatternSpec& p) { return !has_mono_pattern_any(g, p); }

}  // namespace

TEST(BuildFamily, BkWithAllInsideColorOne) {
  FamilyDescriptor d;
  d.family = Family::Bk;
  d.n = 5;
  d.k = 3;
  d.parts = {{0, 1}, {2, 3, 4}};
  d.choices = {{0, 1, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}};
  const auto g = build_family(d);
  EXPECT_EQ(g, EdgeColoring(5, 3, 1));
  EXPECT_FALSE(g.exact());
}

TEST(BuildFamily, BkDefaultsAndChoices) {
  FamilyDescriptor d;
  d.family = Family::Bk;
  d.n = 5;
  d.k = 3;
  d.parts = {{0, 1}, {2, 3, 4}};
  d.choices = {{0, 1, 2}, {3, 4, 3}};
  const auto g = build_family(d);
  EXPECT_EQ(g.color(0, 1), 2);
  EXPECT_EQ(g.color(3, 4), 3);
  EXPECT_EQ(g.color(0, 3), 1);
  EXPECT_TRUE(g.exact());
}

TEST(BuildFamily, G2) {
  FamilyDescriptor d;
  d.family = Family::G2;
  d.n = 6;
  d.special = {0, 1};
  const auto g = build_family(d);
  EXPECT_EQ(g.color(0, 1), 2);
  for (int v = 2; v < 6; ++v) {
    EXPECT_EQ(g.color(0, v), 3);
    EXPECT_EQ(g.color(1, v), 4);
  }
  for (int v = 3; v < 6; ++v)
    for (int u = 2; u < v; ++u) EXPECT_EQ(g.color(u, v), 1);
}

TEST(BuildFamily, G3) {
  FamilyDescriptor d;
  d.family = Family::G3;
  d.n = 5;
  d.special = {0, 1, 2};
  const auto g = build_family(d);
  std::vector<Color> tri = {g.color(0, 1), g.color(1, 2), g.color(0, 2)};
  std::sort(tri.begin(), tri.end());
  EXPECT_EQ(tri, (std::vector<Color>{2, 3, 4}));
  EXPECT_EQ(color_class(g, 1).graph.edge_count(), 7);
}

TEST(BuildFamily, TCrossColors) {
  FamilyDescriptor d;
  d.family = Family::T;
  d.n = 4;
  d.parts = {{0}, {1, 2}, {3}};
  const auto g = build_family(d);
  EXPECT_EQ(g.color(0, 1), 1);
  EXPECT_EQ(g.color(0, 3), 3);
  EXPECT_EQ(g.color(1, 3), 2);
}

TEST(BuildFamily, RejectsBadDescriptors) {
  FamilyDescriptor bk;
  bk.family = Family::Bk;
  bk.n = 5;
  bk.k = 3;
  bk.parts = {{0}, {1, 2, 3, 4}};
  EXPECT_THROW(build_family(bk), DescriptorError);  // part of size 1
  bk.parts = {{0, 1}, {2, 3}};
  EXPECT_THROW(build_family(bk), DescriptorError);  // vertex 4 uncovered
  bk.parts = {{0, 1}, {1, 2, 3, 4}};
  EXPECT_THROW(build_family(bk), DescriptorError);  // overlap
  bk.parts = {{0, 1}, {2, 3, 4}};
  bk.choices = {{0, 1, 3}};
  EXPECT_THROW(build_family(bk), DescriptorError);  // color 3 not allowed in part 0
  bk.choices = {{0, 2, 1}};
  EXPECT_THROW(build_family(bk), DescriptorError);  // cross pair
  bk.choices = {};
  bk.parts = {{0, 1}, {2, 3, 4}, {}};
  EXPECT_THROW(build_family(bk), DescriptorError);  // k-1 parts

  FamilyDescriptor t;
  t.family = Family::T;
  t.n = 3;
  t.parts = {{0, 1, 2}, {}, {}};
  EXPECT_THROW(build_family(t), DescriptorError);
  t.family = Family::G1;
  t.parts = {{0, 1}, {2}, {}};
  EXPECT_NO_THROW(build_family(t));

  FamilyDescriptor g2;
  g2.family = Family::G2;
  g2.n = 4;
  g2.special = {1, 1};
  EXPECT_THROW(build_family(g2), DescriptorError);
}

TEST(KipasLinearWitness, Shape) {
  EXPECT_EQ(witness_kipas_linear(4, 2), EdgeColoring(4, 2, 1));
  const auto w = witness_kipas_linear(8, 4);
  ASSERT_EQ(w.order(), 9);
  EXPECT_EQ(color_class(w, 1).graph.edge_count(), 28);
  for (int v = 0; v < 8; ++v) EXPECT_EQ(w.color(v, 8), 2);
  EXPECT_THROW(witness_kipas_linear(4, 3), DomainError);
  EXPECT_THROW(witness_kipas_linear(6, 4), DomainError);
}

TEST(KipasLinearWitness, AvoidsTargets) {
  for (int n = 4; n <= 12; ++n)
    for (int m = 2; 2 * m <= n; ++m) {
      const auto w = witness_kipas_linear(n, m, true);
      EXPECT_EQ(w.order(), r_kipas_linear_family(n, m, 2).lo - 1);
      EXPECT_FALSE(has_mono_pattern(w, 1, PatternSpec::kipas(n)));
      EXPECT_FALSE(has_mono_pattern(w, 2, PatternSpec::linear_forest(m, 2)));
    }
}

TEST(BkPathWitness, DegenerateH1) {
  const auto d = witness_bk_path_descriptor(3, 6);
  EXPECT_EQ(d.n, 7);
  EXPECT_EQ(part_sizes(d), (std::vector<int>{2, 5}));
  const auto g = witness_bk_path(3, 6, true);
  EXPECT_EQ(longest_mono_path(g, 1).order, 5);
  EXPECT_EQ(longest_mono_path(g, 3).order, 5);
}

TEST(BkPathWitness, PartSizes) {
  // 13 vertices in three parts.
  EXPECT_EQ(part_sizes(witness_bk_path_descriptor(4, 10)), (std::vector<int>{2, 2, 9}));
  EXPECT_EQ(witness_bk_path(4, 10).order(), 13);
}

TEST(BkPathWitness, AvoidsPathsOnRange) {
  for (int k = 3; k <= 5; ++k)
    for (int n = 4 * (k - 2) + 2; n <= 16; ++n) {
      const auto g = witness_bk_path(k, n, true);
      EXPECT_EQ(g.order(), bk_path(k, n).lo - 1);
      EXPECT_TRUE(is_member(g, Family::Bk, true).has_value()) << k << "," << n;
      EXPECT_TRUE(mono_free(g, PatternSpec::path(n)));
    }
  EXPECT_THROW(witness_bk_path(3, 5), DomainError);
}

TEST(TPathWitness, Parts) {
  EXPECT_EQ(part_sizes(witness_t_path_descriptor(5)), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(part_sizes(witness_t_path_descriptor(4)), (std::vector<int>{2, 1, 1}));
  const auto g = witness_t_path(5);
  for (Color c : {1, 2, 3}) EXPECT_EQ(longest_mono_path(g, c).order, 4);
}

TEST(TPathWitness, AvoidsPathsOnRange) {
  for (int n = 3; n <= 16; ++n) {
    const auto g = witness_t_path(n, true);
    EXPECT_EQ(g.order(), t_path(n).lo - 1);
    EXPECT_TRUE(is_member(g, Family::T).has_value());
    EXPECT_TRUE(mono_free(g, PatternSpec::path(n)));
  }
}

TEST(B3KipasWitness, Parts) {
  const auto odd = witness_b3_kipas_descriptor(5);
  EXPECT_EQ(odd.n, 11);
  const auto even = witness_b3_kipas_descriptor(6);
  EXPECT_EQ(even.n, 13);
  // A is 0..n-1; the rest splits into B_1, B_2, B_3, the color-1 cliques outside A.
  auto sizes = [](int n) {
    const auto g = witness_b3_kipas(n);
    const Graph b = g.color_graph(1).induced(low_mask(g.order()) & ~low_mask(n));
    std::vector<int> out;
    for (VertexMask c : b.components()) out.push_back(popcount(c));
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(sizes(5), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(sizes(6), (std::vector<int>{2, 2, 3}));
  const auto g = witness_b3_kipas(5, true);
  for (Color c : {1, 2, 3}) EXPECT_FALSE(has_mono_pattern(g, c, PatternSpec::kipas(5)));
}

TEST(B3KipasWitness, AvoidsKipasOnRange) {
  for (int n = 5; n <= 9; ++n) {
    const auto g = witness_b3_kipas(n, true);
    EXPECT_EQ(g.order(), b3_kipas(n).lo - 1);
    EXPECT_TRUE(is_member(g, Family::Bk, true).has_value());
  }
}

TEST(SmallKipasWitness, Gamma1) {
  const auto g = witness_small_kipas(2, true);
  ASSERT_EQ(g.order(), 4);
  std::vector<Color> colors(g.raw().begin(), g.raw().end());
  std::sort(colors.begin(), colors.end());
  EXPECT_EQ(colors, (std::vector<Color>{1, 1, 1, 1, 2, 3}));
  EXPECT_EQ(g.color(0, 1), 2);
  EXPECT_EQ(g.color(2, 3), 3);
  EXPECT_TRUE(is_member(g, Family::Bk, true).has_value());
}

TEST(SmallKipasWitness, Gamma2) {
  const auto g = witness_small_kipas(3, true);
  ASSERT_EQ(g.order(), 6);
  EXPECT_EQ(color_class(g, 1).graph.edge_count(), 9);
  EXPECT_EQ(color_class(g, 2).graph.edge_count(), 3);
  EXPECT_EQ(color_class(g, 3).graph.edge_count(), 3);
  EXPECT_TRUE(is_member(g, Family::Bk, true).has_value());
  EXPECT_THROW(witness_small_kipas(4), DomainError);
}

TEST(FamilyNames, Stable) {
  EXPECT_EQ(to_string(Family::Bk), "bk");
  EXPECT_EQ(to_string(Family::G1), "g1");
  EXPECT_EQ(to_string(Family::Shape2), "shape-ii");
  EXPECT_EQ(to_string(Family::Dominant), "dominant");
}
