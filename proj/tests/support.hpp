#pragma once

#include <random>

#include "kipas/coloring.hpp"

namespace kipas::testing {

inline EdgeColoring random_coloring(std::mt19937_64& rng, int n, int k) {
  EdgeColoring g(n, k);
  std::uniform_int_distribution<int> pick(1, k);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.set(u, v, pick(rng));
  return g;
}

// Two-coloring whose color-1 class is exactly h (other pairs color 2).
inline EdgeColoring from_graph(const Graph& h) {
  EdgeColoring g(h.order(), 2, 2);
  for (auto [u, v] : h.edges()) g.set(u, v, 1);
  return g;
}

}  // namespace kipas::testing
