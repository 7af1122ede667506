#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kipas/constructions.hpp"
#include "kipas/errors.hpp"
#include "kipas/patterns.hpp"
#include "kipas/search.hpp"
#include "kipas/structure.hpp"
#include "support.hpp"

using namespace kipas;

namespace {

FamilyDescriptor g2_descriptor(int n, int x, int y) {
  FamilyDescriptor d;
  d.family = Family::G2;
  d.n = n;
  d.special = {x, y};
  return d;
}

EdgeColoring shape2_example() {
  // Monochromatic K_5 on 0..4 plus vertex 5 with a star colored 2, 3, 4.
  EdgeColoring g(6, 4, 1);
  g.set(0, 5, 2);
  g.set(1, 5, 3);
  g.set(2, 5, 4);
  return g;
}

}  // namespace

TEST(Classify, BkWitnessIsDominant) {
  const auto d = witness_bk_path_descriptor(3, 6);
  const auto g = witness_bk_path(3, 6);
  const auto c = classify_structure(g, RainbowContext::K13);
  ASSERT_TRUE(c.classified());
  EXPECT_EQ(c.label(), "dominant");
  auto parts = c.descriptor->parts;
  auto expected = d.parts;
  std::sort(parts.begin(), parts.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(parts, expected);
  EXPECT_TRUE(descriptor_matches(g, *c.descriptor));
}

TEST(Classify, G2) {
  const auto g = build_family(g2_descriptor(6, 0, 1));
  const auto c = classify_structure(g, RainbowContext::P4plus);
  ASSERT_EQ(c.label(), "g2");
  EXPECT_EQ(c.descriptor->special, (std::vector<int>{0, 1}));
  EXPECT_FALSE(has_rainbow(g, PatternSpec::p4plus()));
}

TEST(Classify, G3) {
  FamilyDescriptor d;
  d.family = Family::G3;
  d.n = 6;
  d.special = {1, 3, 4};
  const auto g = build_family(d);
  const auto c = classify_structure(g, RainbowContext::P4plus);
  ASSERT_EQ(c.label(), "g3");
  EXPECT_TRUE(descriptor_matches(g, *c.descriptor));
}

TEST(Classify, Shape2) {
  const auto g = shape2_example();
  EXPECT_FALSE(has_rainbow(g, PatternSpec::path(5)));
  const auto c = classify_structure(g, RainbowContext::P5);
  ASSERT_EQ(c.label(), "shape-ii");
  EXPECT_EQ(c.descriptor->special, std::vector<int>{5});
}

TEST(Classify, TooFewColors) {
  EXPECT_FALSE(classify_structure(EdgeColoring(5, 3, 1), RainbowContext::K13).classified());
  EXPECT_EQ(classify_structure(EdgeColoring(5, 3, 1), RainbowContext::P5).label(), "unclassified");
}

TEST(Classify, ContextNames) {
  EXPECT_EQ(parse_context("p5"), RainbowContext::P5);
  EXPECT_EQ(parse_context("k13"), RainbowContext::K13);
  EXPECT_EQ(parse_context("p4plus"), RainbowContext::P4plus);
  EXPECT_ANY_THROW(parse_context("k3"));
}

TEST(Classify, RainbowP5FreeFourColoringsOfK5) {
  // Every 4-coloring of K_5 without a rainbow P_5 is one of the listed shapes.
  long seen = 0;
  for_each_coloring(5, 4, true, [&](const EdgeColoring& g) {
    if (has_rainbow(g, PatternSpec::path(5))) return true;
    ++seen;
    const auto c = classify_structure(g, RainbowContext::P5);
    EXPECT_TRUE(c.classified()) << write_coloring(g);
    if (c.descriptor) EXPECT_TRUE(descriptor_matches(g, *c.descriptor));
    return true;
  });
  EXPECT_GT(seen, 0);
}

TEST(Classify, RainbowP4plusFreeFourColoringsOfK5) {
  long seen = 0;
  for_each_coloring(5, 4, true, [&](const EdgeColoring& g) {
    if (has_rainbow(g, PatternSpec::p4plus())) return true;
    ++seen;
    const auto c = classify_structure(g, RainbowContext::P4plus);
    EXPECT_TRUE(c.classified()) << write_coloring(g);
    return true;
  });
  EXPECT_GT(seen, 0);
}

TEST(Membership, Examples) {
  EXPECT_TRUE(is_member(witness_small_kipas(2), Family::Bk, true).has_value());
  const auto t = is_member(witness_t_path(5), Family::T);
  ASSERT_TRUE(t);
  for (const auto& p : t->parts) EXPECT_EQ(p.size(), 2U);
  EXPECT_FALSE(is_member(EdgeColoring(5, 3, 1), Family::Bk, true).has_value());
  EXPECT_TRUE(is_member(EdgeColoring(5, 3, 1), Family::Bk, false).has_value());
}

TEST(Membership, RandomFamilyMembersAreRecognised) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    FamilyDescriptor d;
    d.family = Family::T;
    d.parts.assign(3, {});
    const int n = 3 + static_cast<int>(rng() % 8);
    d.n = n;
    for (int v = 0; v < n; ++v) d.parts[v < 3 ? v : rng() % 3].push_back(v);
    const std::vector<std::vector<Color>> inside = {{1, 3}, {1, 2}, {2, 3}};
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t a = 0; a < d.parts[p].size(); ++a)
        for (std::size_t b = a + 1; b < d.parts[p].size(); ++b)
          d.choices.push_back({d.parts[p][a], d.parts[p][b], inside[p][rng() % 2]});
    const auto g = build_family(d);
    const auto m = is_member(g, Family::T);
    ASSERT_TRUE(m) << write_coloring(g);
    EXPECT_TRUE(descriptor_matches(g, *m));
  }
}

TEST(StarForest, Examples) {
  const auto g2 = build_family(g2_descriptor(6, 0, 1));
  EXPECT_TRUE(star_forest_check(g2, 3));
  EXPECT_TRUE(star_forest_check(g2, 2));
  EXPECT_FALSE(star_forest_check(g2, 1));
  // Shape (iv): ab=2, ac=bd=3, ad=bc=4.
  EdgeColoring s4(6, 4, 1);
  s4.set(0, 1, 2);
  s4.set(0, 2, 3);
  s4.set(1, 3, 3);
  s4.set(0, 3, 4);
  s4.set(1, 2, 4);
  EXPECT_TRUE(star_forest_check(s4, 3));
  EdgeColoring p4(5, 2, 1);
  p4.set(0, 1, 2);
  p4.set(1, 2, 2);
  p4.set(2, 3, 2);
  EXPECT_FALSE(star_forest_check(p4, 2));
}

TEST(Hamiltonian, Examples) {
  const auto c = multipartite_ham({2, 2, 3}, HamMode::Cycle);
  EXPECT_EQ(c.size(), 7U);
  EXPECT_TRUE(validate_ham({2, 2, 3}, c, HamMode::Cycle));
  const auto p = multipartite_ham({1, 2}, HamMode::Path);
  EXPECT_EQ(p.size(), 3U);
  EXPECT_TRUE(validate_ham({1, 2}, p, HamMode::Path));
  const auto b = multipartite_ham({3, 3}, HamMode::Cycle);
  ASSERT_TRUE(validate_ham({3, 3}, b, HamMode::Cycle));
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_NE(b[i] < 3, b[(i + 1) % b.size()] < 3);
}

TEST(Hamiltonian, Preconditions) {
  EXPECT_THROW(multipartite_ham({1, 4}, HamMode::Cycle), DomainError);
  EXPECT_THROW(multipartite_ham({1, 1, 4}, HamMode::Path), DomainError);
  EXPECT_THROW(multipartite_ham({2, 4}, HamMode::Path), DomainError);
  EXPECT_THROW(multipartite_ham({1, 1}, HamMode::Cycle), DomainError);
  EXPECT_FALSE(validate_ham({2, 2}, {0, 1, 2, 3}, HamMode::Cycle));
  EXPECT_FALSE(validate_ham({2, 2}, {0, 2, 1}, HamMode::Cycle));
}

TEST(Hamiltonian, RandomSizes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> sizes(2 + rng() % 5);
    for (int& s : sizes) s = 1 + static_cast<int>(rng() % 6);
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    const int big = *std::max_element(sizes.begin(), sizes.end());
    if (total - big >= big && total >= 3)
      EXPECT_TRUE(validate_ham(sizes, multipartite_ham(sizes, HamMode::Cycle), HamMode::Cycle));
    if (total - big == big - 1)
      EXPECT_TRUE(validate_ham(sizes, multipartite_ham(sizes, HamMode::Path), HamMode::Path));
  }
}
