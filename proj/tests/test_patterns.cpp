#include <gtest/gtest.h>

#include <random>

#include "kipas/constructions.hpp"
#include "kipas/errors.hpp"
#include "kipas/patterns.hpp"
#include "naive.hpp"
#include "support.hpp"

using namespace kipas;
using kipas::testing::from_graph;
using kipas::testing::random_coloring;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace

TEST(ParsePattern, Syntax) {
  EXPECT_EQ(parse_pattern("path:5"), PatternSpec::path(5));
  EXPECT_EQ(parse_pattern("p5"), PatternSpec::path(5));
  EXPECT_EQ(parse_pattern("star:3"), PatternSpec::star(3));
  EXPECT_EQ(parse_pattern("k13"), PatternSpec::star(3));
  EXPECT_EQ(parse_pattern("kipas:4"), PatternSpec::kipas(4));
  EXPECT_EQ(parse_pattern("lf:minedges=6,minorder=3"), PatternSpec::linear_forest(6, 3));
  EXPECT_EQ(parse_pattern("lfx:2+4"), PatternSpec::linear_forest_exact({4, 2}));
  EXPECT_EQ(parse_pattern("k:3"), PatternSpec::complete(3));
  EXPECT_EQ(parse_pattern("p4plus"), PatternSpec::p4plus());
  for (const char* bad : {"", "path", "path:x", "star:0", "lf:minedges=2,minorder=4", "lfx:", "tree:3"})
    EXPECT_ANY_THROW(parse_pattern(bad)) << bad;
}

TEST(ParsePattern, RoundTrip) {
  for (const char* s : {"path:5", "star:3", "kipas:4", "lf:minedges=2,minorder=2", "lfx:3+3", "k:4", "p4plus"})
    EXPECT_EQ(parse_pattern(to_string(parse_pattern(s))), parse_pattern(s)) << s;
}

TEST(PatternSpec, Shapes) {
  EXPECT_EQ(PatternSpec::kipas(4).vertex_count(), 5);
  EXPECT_EQ(PatternSpec::kipas(4).edge_count(), 7);
  EXPECT_EQ(PatternSpec::p4plus().vertex_count(), 5);
  EXPECT_EQ(PatternSpec::p4plus().edge_count(), 4);
  EXPECT_EQ(PatternSpec::linear_forest(6, 3).vertex_count(), 7);
  EXPECT_FALSE(PatternSpec::linear_forest(2, 2).as_graph().has_value());
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_mono_path(EdgeColoring(4, 2, 1), 1).order, 4);
  EXPECT_EQ(longest_mono_path(EdgeColoring(4, 2, 1), 2).order, 1);
  const auto w = witness_t_path(5);
  ASSERT_EQ(w.order(), 6);
  for (Color c : {1, 2, 3}) {
    const auto res = longest_mono_path(w, c);
    EXPECT_EQ(res.order, 4) << "color " << c;
    EXPECT_EQ(res.order, naive::longest_path_order(w.color_graph(c)));
    EXPECT_TRUE(validate_embedding(w, res.witness));
  }
}

TEST(LongestPath, LexSmallest) {
  Graph g(5);
  g.add_edge(3, 4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(0, 4);
  EXPECT_EQ(longest_path(g), (std::vector<int>{0, 4, 3, 2, 1}));
  EXPECT_EQ(find_path(g, 3), (std::vector<int>{0, 4, 3}));
  EXPECT_TRUE(find_path(g, 6).empty());
}

TEST(LongestPath, LargeHostUsesSearchFallback) {
  Graph g(30);
  for (int i = 0; i + 1 < 30; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, 29);
  EXPECT_EQ(longest_path_order(g), 30);
}

TEST(MonoPattern, Examples) {
  EXPECT_TRUE(has_mono_pattern(EdgeColoring(5, 2, 1), 1, PatternSpec::kipas(4)));
  const auto gamma1 = witness_small_kipas(2);
  for (Color c : {1, 2, 3}) EXPECT_FALSE(has_mono_pattern(gamma1, c, PatternSpec::kipas(2)));
  const auto b3 = witness_b3_kipas(5);
  ASSERT_EQ(b3.order(), 11);
  for (Color c : {1, 2, 3}) EXPECT_FALSE(has_mono_pattern(b3, c, PatternSpec::kipas(5))) << c;
}

TEST(MonoPattern, WitnessIsValid) {
  const auto hit = has_mono_pattern(EdgeColoring(6, 2, 1), 1, PatternSpec::kipas(4));
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->color, 1);
  EXPECT_EQ(hit->vertex_map, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(validate_embedding(EdgeColoring(6, 2, 1), *hit));
  auto broken = *hit;
  broken.vertex_map[1] = broken.vertex_map[2];
  EXPECT_FALSE(validate_embedding(EdgeColoring(6, 2, 1), broken));
}

TEST(MonoPattern, LargerThanHost) {
  EXPECT_FALSE(has_mono_pattern(EdgeColoring(3, 1), 1, PatternSpec::path(4)));
}

TEST(LinearForest, Examples) {
  const auto p7 = from_graph(path_graph(7));
  EXPECT_EQ(max_linear_forest(p7, 1, 3).edges, 6);
  const auto star = from_graph(star_graph(3));
  const auto res = max_linear_forest(star, 1, 2);
  EXPECT_EQ(res.edges, 2);
  EXPECT_TRUE(validate_forest(star, 1, res.witness, 2));
  // Red K_6 plus a vertex joined in blue to everything: the blue class is K_{1,6}.
  EdgeColoring w(7, 2, 1);
  for (int v = 0; v < 6; ++v) w.set(v, 6, 2);
  EXPECT_EQ(max_linear_forest(w, 2, 2).edges, 2);
  EXPECT_EQ(naive::max_linear_forest_edges(w.color_graph(2), 2), 2);
}

TEST(LinearForest, MinOrderThree) {
  // 2P_2 has no 3-linear forest.
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  EXPECT_EQ(max_linear_forest(from_graph(g), 1, 3).edges, 0);
  EXPECT_EQ(max_linear_forest(from_graph(g), 1, 2).edges, 2);
}

TEST(Rainbow, Examples) {
  FamilyDescriptor d;
  d.family = Family::G3;
  d.n = 6;
  d.special = {0, 1, 2};
  const auto g3 = build_family(d);
  const auto tri = has_rainbow(g3, PatternSpec::complete(3));
  ASSERT_TRUE(tri);
  EXPECT_FALSE(tri->color.has_value());
  EXPECT_TRUE(validate_embedding(g3, *tri));

  EdgeColoring mono(6, 3, 2);
  EXPECT_FALSE(has_rainbow(mono, PatternSpec::path(3)));
  EXPECT_FALSE(has_rainbow(mono, PatternSpec::complete(3)));

  EdgeColoring k4(4, 4, 1);
  k4.set(0, 1, 2);
  k4.set(0, 2, 3);
  k4.set(0, 3, 4);
  EXPECT_TRUE(has_rainbow(k4, PatternSpec::star(3)));
}

TEST(Rainbow, NeedsDistinctColors) {
  EdgeColoring g(5, 3, 1);
  g.set(0, 1, 2);
  g.set(1, 2, 3);
  // 3-0-1-2 carries colors 1, 2, 3; a rainbow P_5 would need a fourth color.
  EXPECT_TRUE(has_rainbow(g, PatternSpec::path(4)));
  EXPECT_FALSE(has_rainbow(g, PatternSpec::path(5)));
}

// ---- agreement with the permutation oracles -----------------------------

class Oracle : public ::testing::TestWithParam<int> {};

TEST_P(Oracle, RandomColorClasses) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const std::vector<PatternSpec> patterns = {
      PatternSpec::path(3),   PatternSpec::path(5),   PatternSpec::star(3),
      PatternSpec::kipas(3),  PatternSpec::kipas(4),  PatternSpec::complete(3),
      PatternSpec::p4plus(),  PatternSpec::linear_forest_exact({2, 2}),
      PatternSpec::linear_forest_exact({4, 2}),       PatternSpec::linear_forest(3, 2),
      PatternSpec::linear_forest(3, 3),               PatternSpec::linear_forest(5, 2)};
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto g = random_coloring(rng, n, k);
    for (Color c = 1; c <= k; ++c) {
      const Graph h = g.color_graph(c);
      EXPECT_EQ(longest_mono_path(g, c).order, naive::longest_path_order(h));
      for (int order : {2, 3})
        EXPECT_EQ(max_linear_forest(g, c, order).edges, naive::max_linear_forest_edges(h, order));
      for (const auto& p : patterns) {
        const auto hit = has_mono_pattern(g, c, p);
        EXPECT_EQ(hit.has_value(), naive::contains(h, p)) << to_string(p) << "\n" << write_coloring(g);
        if (hit) EXPECT_TRUE(validate_embedding(g, *hit));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Oracle, ::testing::Values(1, 2, 3, 4));

TEST(Oracle, RainbowAgainstBruteForce) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 4);
    const auto g = random_coloring(rng, n, k);
    for (const auto& p : {PatternSpec::path(4), PatternSpec::path(5), PatternSpec::star(3), PatternSpec::complete(3)}) {
      const Graph pg = *p.as_graph();
      if (pg.order() > n) {
        EXPECT_FALSE(has_rainbow(g, p));
        continue;
      }
      // Brute force: some injective map with pairwise distinct edge colors.
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
      bool found = false;
      do {
        std::vector<bool> used(static_cast<std::size_t>(k + 1), false);
        bool ok = true;
        for (auto [u, v] : pg.edges()) {
          const Color c = g.color(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
          if (used[static_cast<std::size_t>(c)]) ok = false;
          used[static_cast<std::size_t>(c)] = true;
        }
        found = ok;
      } while (!found && std::next_permutation(perm.begin(), perm.end()));
      const auto hit = has_rainbow(g, p);
      EXPECT_EQ(hit.has_value(), found) << to_string(p);
      if (hit) EXPECT_TRUE(validate_embedding(g, *hit));
    }
  }
}
