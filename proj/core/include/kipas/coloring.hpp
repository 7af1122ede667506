#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kipas/graph.hpp"

namespace kipas {

using Color = int;

inline constexpr int kMaxColors = 64;

// Rank of the unordered pair {u, v} in the triangular layout.
inline constexpr int pair_rank(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// A k-edge-coloring of K_n. Vertices are 0..n-1, colors 1..k.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  // Every pair starts with color `fill`.
  EdgeColoring(int n, int k, Color fill = 1);

  int order() const { return n_; }
  int num_colors() const { return k_; }

  // Whether the coloring is asserted to use every color in 1..k.
  bool exact() const { return exact_; }

  Color color(int u, int v) const { return colors_[pair_rank(u, v)]; }

  void set(int u, int v, Color c);

  // Sets the exact flag; throws DomainError if some color in 1..k is unused.
  void set_exact(bool exact);

  // Graph of all pairs carrying color c. No range check.
  Graph color_graph(Color c) const;

  // Colors in pair-rank order, mostly for hashing and tests.
  const std::vector<std::uint8_t>& raw() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  bool exact_ = false;
  std::vector<std::uint8_t> colors_;
};

struct ColorClass {
  Color color = 0;
  Graph graph;
};

// The spanning subgraph of color-c pairs. Throws DomainError if c is outside 1..k.
ColorClass color_class(const EdgeColoring& coloring, Color c);

// Sorted list of colors that appear on at least one pair.
std::vector<Color> colors_used(const EdgeColoring& coloring);

// "ecg v1" text format.
EdgeColoring read_coloring(std::string_view text);
std::string write_coloring(const EdgeColoring& coloring);

EdgeColoring load_coloring(const std::filesystem::path& path);
void save_coloring(const EdgeColoring& coloring, const std::filesystem::path& path);

}  // namespace kipas
