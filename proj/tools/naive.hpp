#pragma once

// Slow reference implementations used to cross-check the detectors. They
// share no code with the library's detectors beyond the Graph container.

#include <optional>
#include <vector>

#include "kipas/coloring.hpp"
#include "kipas/graph.hpp"
#include "kipas/patterns.hpp"

namespace kipas::naive {

// Longest path order by trying every vertex permutation (n <= 8).
int longest_path_order(const Graph& g);

// Most edges in a linear forest whose components have >= min_order vertices,
// by cutting every vertex permutation into maximal host-path runs (n <= 8).
int max_linear_forest_edges(const Graph& g, int min_order);

// Pattern containment by trying every injective vertex map (n <= 8).
bool contains(const Graph& g, const PatternSpec& p);

// Smallest N <= max_n with every 2-coloring of K_N holding a red `red` or a
// blue `blue`, by listing all 2^C(N,2) colorings; nullopt if none.
std::optional<int> ramsey(const PatternSpec& red, const PatternSpec& blue, int max_n);

}  // namespace kipas::naive
