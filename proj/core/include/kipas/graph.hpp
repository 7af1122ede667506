#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace kipas {

inline constexpr int kMaxVertices = 32;

using VertexMask = std::uint32_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(int n) {
  return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

inline int lowest(VertexMask m) { return std::countr_zero(m); }

// Simple undirected graph on at most 32 vertices, one adjacency word per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}

  int order() const { return n_; }

  void add_edge(int u, int v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  void remove_edge(int u, int v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (VertexMask m = adj_[u] & ~low_mask(u + 1); m; m &= m - 1) out.emplace_back(u, lowest(m));
    return out;
  }

  // Graph induced on `keep`, relabelled 0..|keep|-1 in increasing vertex order.
  Graph induced(VertexMask keep, std::vector<int>* labels = nullptr) const;

  // Connected components as vertex masks, ordered by smallest member.
  std::vector<VertexMask> components() const;

  const std::array<VertexMask, kMaxVertices>& adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

inline Graph Graph::induced(VertexMask keep, std::vector<int>* labels) const {
  std::array<int, kMaxVertices> index{};
  std::vector<int> order;
  for (VertexMask m = keep; m; m &= m - 1) {
    index[lowest(m)] = static_cast<int>(order.size());
    order.push_back(lowest(m));
  }
  Graph g(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexMask m = adj_[order[i]] & keep; m; m &= m - 1) g.adj_[i] |= bit(index[lowest(m)]);
  if (labels) *labels = std::move(order);
  return g;
}

inline std::vector<VertexMask> Graph::components() const {
  std::vector<VertexMask> out;
  VertexMask unseen = low_mask(n_);
  while (unseen) {
    VertexMask comp = bit(lowest(unseen));
    VertexMask frontier = comp;
    while (frontier) {
      const int v = lowest(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = adj_[v] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

}  // namespace kipas
