#include "naive.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kipas::naive {

namespace {

std::vector<int> identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

void require_small(const Graph& g) {
  if (g.order() > 8) throw std::invalid_argument("naive oracles handle at most 8 vertices");
}

bool maps_into(const Graph& pattern, const Graph& host, const std::vector<int>& image) {
  for (auto [u, v] : pattern.edges())
    if (!host.has_edge(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) return false;
  return true;
}

bool try_maps(const Graph& pattern, const Graph& host, std::vector<int>& image, std::vector<char>& taken) {
  if (image.size() == static_cast<std::size_t>(pattern.order())) return maps_into(pattern, host, image);
  for (int v = 0; v < host.order(); ++v) {
    if (taken[static_cast<std::size_t>(v)]) continue;
    taken[static_cast<std::size_t>(v)] = 1;
    image.push_back(v);
    const bool hit = try_maps(pattern, host, image, taken);
    image.pop_back();
    taken[static_cast<std::size_t>(v)] = 0;
    if (hit) return true;
  }
  return false;
}

}  // namespace

int longest_path_order(const Graph& g) {
  require_small(g);
  if (g.order() == 0) return 0;
  int best = 1;
  auto perm = identity(g.order());
  do {
    int run = 1;
    for (std::size_t i = 1; i < perm.size(); ++i) {
      run = g.has_edge(perm[i - 1], perm[i]) ? run + 1 : 1;
      best = std::max(best, run);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int max_linear_forest_edges(const Graph& g, int min_order) {
  require_small(g);
  int best = 0;
  auto perm = identity(g.order());
  do {
    int total = 0;
    int run = 1;
    for (std::size_t i = 1; i <= perm.size(); ++i) {
      if (i < perm.size() && g.has_edge(perm[i - 1], perm[i])) {
        ++run;
        continue;
      }
      if (run >= std::max(2, min_order)) total += run - 1;
      run = 1;
    }
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool contains(const Graph& g, const PatternSpec& p) {
  require_small(g);
  if (p.kind == PatternKind::LinearForestMinEdges)
    return max_linear_forest_edges(g, p.min_component_order) >= p.min_edges;
  const auto pattern = p.as_graph();
  if (!pattern || pattern->order() > g.order()) return false;
  std::vector<int> image;
  std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
  return try_maps(*pattern, g, image, taken);
}

std::optional<int> ramsey(const PatternSpec& red, const PatternSpec& blue, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const int e = n * (n - 1) / 2;
    bool all_hit = true;
    for (long mask = 0; mask < (1L << e) && all_hit; ++mask) {
      Graph r(n), b(n);
      int bit_index = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit_index) {
          if (mask >> bit_index & 1) b.add_edge(u, v);
          else r.add_edge(u, v);
        }
      all_hit = naive::contains(r, red) || naive::contains(b, blue);
    }
    if (all_hit) return n;
  }
  return std::nullopt;
}

}  // namespace kipas::naive
