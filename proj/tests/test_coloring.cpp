#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "kipas/coloring.hpp"
#include "kipas/constructions.hpp"
#include "kipas/errors.hpp"
#include "support.hpp"

using namespace kipas;

TEST(Coloring, ConstructionFillsEveryPair) {
  EdgeColoring g(5, 3, 2);
  for (int v = 1; v < 5; ++v)
    for (int u = 0; u < v; ++u) EXPECT_EQ(g.color(u, v), 2);
  EXPECT_EQ(g.color(3, 1), g.color(1, 3));
}

TEST(Coloring, ColorClassOfMonochromaticClique) {
  EdgeColoring g(4, 2, 1);
  EXPECT_EQ(color_class(g, 1).graph.edge_count(), 6);
  const auto blue = color_class(g, 2);
  EXPECT_EQ(blue.graph.order(), 4);
  EXPECT_EQ(blue.graph.edge_count(), 0);
  EXPECT_THROW(color_class(g, 3), DomainError);
  EXPECT_THROW(color_class(g, 0), DomainError);
}

TEST(Coloring, ColorClassOfG3IsOneEdge) {
  FamilyDescriptor d;
  d.family = Family::G3;
  d.n = 5;
  d.special = {0, 1, 2};
  const auto g = build_family(d);
  const auto c2 = color_class(g, 2).graph;
  ASSERT_EQ(c2.edge_count(), 1);
  EXPECT_TRUE(c2.has_edge(0, 1));
}

TEST(Coloring, ColorsUsed) {
  EXPECT_EQ(colors_used(EdgeColoring(4, 3, 1)), std::vector<Color>{1});
  FamilyDescriptor d;
  d.family = Family::G2;
  d.n = 6;
  d.special = {0, 1};
  EXPECT_EQ(colors_used(build_family(d)), (std::vector<Color>{1, 2, 3, 4}));
  EXPECT_EQ(colors_used(EdgeColoring(2, 5, 5)), std::vector<Color>{5});
}

TEST(Coloring, SetRejectsBadInput) {
  EdgeColoring g(3, 2);
  EXPECT_THROW(g.set(0, 1, 3), DomainError);
  EXPECT_THROW(g.set(0, 1, 0), DomainError);
  EXPECT_THROW(g.set(1, 1, 1), DomainError);
  EXPECT_THROW(g.set(0, 3, 1), DomainError);
  EXPECT_THROW(g.set_exact(true), DomainError);
  g.set(0, 1, 2);
  EXPECT_NO_THROW(g.set_exact(true));
  EXPECT_TRUE(g.exact());
}

TEST(Ecg, ReadsTriangle) {
  const auto g = read_coloring("ecg 1\n3 1 0\n0 1 1\n0 2 1\n1 2 1\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.num_colors(), 1);
  EXPECT_EQ(color_class(g, 1).graph.edge_count(), 3);
}

TEST(Ecg, AcceptsCommentsAndAnyOrder) {
  const auto g = read_coloring("# header next\necg 1\n3 2 1\n1 2 2\n# middle\n0 2 1\n0 1 1\n");
  EXPECT_EQ(g.color(1, 2), 2);
  EXPECT_TRUE(g.exact());
  EXPECT_EQ(write_coloring(g), "ecg 1\n3 2 1\n0 1 1\n0 2 1\n1 2 2\n");
}

TEST(Ecg, MissingEdge) {
  try {
    read_coloring("ecg 1\n3 1 0\n0 1 1\n1 2 1\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing edge"), std::string::npos) << e.what();
  }
}

TEST(Ecg, RejectsMalformedFiles) {
  EXPECT_THROW(read_coloring(""), ParseError);
  EXPECT_THROW(read_coloring("ecg 2\n2 1 0\n0 1 1\n"), ParseError);
  EXPECT_THROW(read_coloring("ecg 1\n2 1\n0 1 1\n"), ParseError);
  EXPECT_THROW(read_coloring("ecg 1\n2 1 0\n0 1 1\n0 1 1\n"), ParseError);
  EXPECT_THROW(read_coloring("ecg 1\n2 1 0\n0 1 2\n"), ParseError);
  EXPECT_THROW(read_coloring("ecg 1\n2 1 0\n1 0 1\n"), ParseError);
  EXPECT_THROW(read_coloring("ecg 1\n2 2 1\n0 1 1\n"), ParseError);
  EXPECT_THROW(read_coloring("ecg 1\n2 1 0\n0 1 1 7\n"), ParseError);
}

TEST(Ecg, ParseErrorCarriesLine) {
  try {
    read_coloring("ecg 1\n3 1 0\n0 1 1\n0 2 x\n1 2 1\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(Ecg, RoundTripRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = 1 + static_cast<int>(rng() % 6);
    const auto g = kipas::testing::random_coloring(rng, n, k);
    const auto text = write_coloring(g);
    EXPECT_EQ(read_coloring(text), g);
    EXPECT_EQ(write_coloring(read_coloring(text)), text);
  }
}

TEST(Ecg, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "kipas_roundtrip.ecg";
  const auto g = witness_t_path(5);
  save_coloring(g, path);
  EXPECT_EQ(load_coloring(path), g);
  std::filesystem::remove(path);
  EXPECT_THROW(load_coloring(path), std::exception);
}
