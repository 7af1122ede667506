#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kipas/coloring.hpp"
#include "kipas/graph.hpp"

namespace kipas {

enum class PatternKind {
  Path,                  // P_n, `order` vertices
  Star,                  // K_{1,n}, `order` leaves
  Kipas,                 // v joined to P_n, `order` is the path order
  LinearForestMinEdges,  // any linear forest with >= min_edges edges, components of order >= min_component_order
  LinearForestExact,     // vertex-disjoint paths with the listed orders
  Complete,              // K_p
  Explicit,              // small explicit graph (<= 8 vertices)
};

// Target subgraph descriptor. Fixed-shape patterns expose their graph through
// as_graph(); the vertex labelling is: paths 0..n-1 in order, stars and kipas
// center 0, linear forests component by component.
struct PatternSpec {
  PatternKind kind = PatternKind::Path;
  int order = 1;
  int min_edges = 0;
  int min_component_order = 2;
  std::vector<int> components;
  Graph graph;
  std::string name;

  static PatternSpec path(int n);
  static PatternSpec star(int leaves);
  static PatternSpec kipas(int n);
  static PatternSpec linear_forest(int min_edges, int min_component_order);
  static PatternSpec linear_forest_exact(std::vector<int> path_orders);
  static PatternSpec complete(int p);
  static PatternSpec explicit_graph(const Graph& g, std::string name);
  // P_4 with a pendant edge at an inner vertex.
  static PatternSpec p4plus();

  // Vertices in the pattern; for LinearForestMinEdges the fewest vertices any member can have.
  int vertex_count() const;
  int edge_count() const;

  // Concrete graph for every kind except LinearForestMinEdges.
  std::optional<Graph> as_graph() const;

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

// CLI syntax: path:N star:N kipas:N lf:minedges=M,minorder=2|3 lfx:2+4 k:P p4plus,
// with the aliases p5 = path:5 and k13 = star:3.
PatternSpec parse_pattern(std::string_view text);
std::string to_string(const PatternSpec& p);

// Witness that a pattern occurs. vertex_map[i] is the host vertex of pattern vertex i.
struct Embedding {
  PatternSpec pattern;
  std::vector<int> vertex_map;
  std::optional<Color> color;  // absent for rainbow embeddings
};

// Vertex-disjoint paths in one color class.
struct ForestWitness {
  std::vector<std::vector<int>> components;

  int total_order() const;
  int component_count() const { return static_cast<int>(components.size()); }
  int edge_count() const { return total_order() - component_count(); }
};

struct PathResult {
  int order = 1;
  Embedding witness;
};

struct ForestResult {
  int edges = 0;
  ForestWitness witness;
};

// Largest vertex count handled by the subset DP for paths; larger components
// fall back to a budgeted depth-first search.
inline constexpr int kPathDpLimit = 22;
// Largest host order accepted by the linear-forest branch and bound.
inline constexpr int kForestSearchLimit = 20;

// ---- graph-level detectors -------------------------------------------------

// Order of a longest path (1 for the edgeless graph, 0 for the empty graph).
int longest_path_order(const Graph& g);

// Lexicographically smallest vertex sequence of a path with exactly `order`
// vertices, or empty if none exists.
std::vector<int> find_path(const Graph& g, int order);

// Lexicographically smallest longest path.
std::vector<int> longest_path(const Graph& g);

// Lexicographically smallest vertex map of `p` into g (pattern vertex order),
// for every kind except LinearForestMinEdges.
std::optional<std::vector<int>> find_embedding(const Graph& g, const PatternSpec& p);

// Maximum linear forest whose components all have order >= min_component_order.
// Stops early once `stop_at` edges are reached.
ForestWitness max_linear_forest(const Graph& g, int min_component_order, int stop_at = kMaxVertices);

// Fast yes/no containment used inside search loops.
bool contains(const Graph& g, const PatternSpec& p);

// ---- coloring-level operations --------------------------------------------

PathResult longest_mono_path(const EdgeColoring& coloring, Color c);

std::optional<Embedding> has_mono_pattern(const EdgeColoring& coloring, Color c, const PatternSpec& p);

// First color (ascending) holding a monochromatic copy.
std::optional<Embedding> has_mono_pattern_any(const EdgeColoring& coloring, const PatternSpec& p);

ForestResult max_linear_forest(const EdgeColoring& coloring, Color c, int min_component_order);

std::optional<Embedding> has_rainbow(const EdgeColoring& coloring, const PatternSpec& p);

// Re-checks a witness against the host coloring.
bool validate_embedding(const EdgeColoring& coloring, const Embedding& e);
bool validate_forest(const EdgeColoring& coloring, Color c, const ForestWitness& w, int min_component_order);

}  // namespace kipas
