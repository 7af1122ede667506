#include "kipas/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <numeric>

#include "kipas/errors.hpp"

namespace kipas {

// ---- PatternSpec -------------------------------------------------------------

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw DomainError(std::string(what) + " must be >= 1");
}

}  // namespace

PatternSpec PatternSpec::path(int n) {
  require_positive(n, "path order");
  PatternSpec p;
  p.kind = PatternKind::Path;
  p.order = n;
  return p;
}

PatternSpec PatternSpec::star(int leaves) {
  require_positive(leaves, "star leaf count");
  PatternSpec p;
  p.kind = PatternKind::Star;
  p.order = leaves;
  return p;
}

PatternSpec PatternSpec::kipas(int n) {
  require_positive(n, "kipas path order");
  PatternSpec p;
  p.kind = PatternKind::Kipas;
  p.order = n;
  return p;
}

PatternSpec PatternSpec::linear_forest(int min_edges, int min_component_order) {
  require_positive(min_edges, "linear forest edge count");
  if (min_component_order != 2 && min_component_order != 3)
    throw DomainError("linear forest minimum component order must be 2 or 3");
  PatternSpec p;
  p.kind = PatternKind::LinearForestMinEdges;
  p.min_edges = min_edges;
  p.min_component_order = min_component_order;
  p.order = min_edges;
  return p;
}

PatternSpec PatternSpec::linear_forest_exact(std::vector<int> path_orders) {
  if (path_orders.empty()) throw DomainError("linear forest needs at least one component");
  for (int c : path_orders)
    if (c < 2) throw DomainError("linear forest components must have order >= 2");
  std::sort(path_orders.begin(), path_orders.end(), std::greater<>());
  PatternSpec p;
  p.kind = PatternKind::LinearForestExact;
  p.order = std::accumulate(path_orders.begin(), path_orders.end(), 0);
  if (p.order > kMaxVertices) throw DomainError("linear forest has more than 32 vertices");
  p.components = std::move(path_orders);
  return p;
}

PatternSpec PatternSpec::complete(int k) {
  require_positive(k, "complete graph order");
  PatternSpec p;
  p.kind = PatternKind::Complete;
  p.order = k;
  return p;
}

PatternSpec PatternSpec::explicit_graph(const Graph& g, std::string name) {
  if (g.order() < 1 || g.order() > 8) throw DomainError("explicit patterns must have 1..8 vertices");
  for (int v = 0; v < g.order(); ++v)
    if (g.has_edge(v, v)) throw DomainError("explicit pattern has a loop");
  PatternSpec p;
  p.kind = PatternKind::Explicit;
  p.order = g.order();
  p.graph = g;
  p.name = std::move(name);
  return p;
}

PatternSpec PatternSpec::p4plus() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 4);
  return explicit_graph(g, "p4plus");
}

int PatternSpec::vertex_count() const {
  switch (kind) {
    case PatternKind::Path:
    case PatternKind::Complete:
    case PatternKind::LinearForestExact:
      return order;
    case PatternKind::Star:
    case PatternKind::Kipas:
      return order + 1;
    case PatternKind::LinearForestMinEdges:
      return std::max(min_edges + 1, min_component_order);
    case PatternKind::Explicit:
      return graph.order();
  }
  return order;
}

int PatternSpec::edge_count() const {
  switch (kind) {
    case PatternKind::Path:
      return order - 1;
    case PatternKind::Star:
      return order;
    case PatternKind::Kipas:
      return 2 * order - 1;
    case PatternKind::LinearForestMinEdges:
      return min_edges;
    case PatternKind::LinearForestExact:
      return order - static_cast<int>(components.size());
    case PatternKind::Complete:
      return order * (order - 1) / 2;
    case PatternKind::Explicit:
      return graph.edge_count();
  }
  return 0;
}

std::optional<Graph> PatternSpec::as_graph() const {
  switch (kind) {
    case PatternKind::Path: {
      Graph g(order);
      for (int i = 0; i + 1 < order; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case PatternKind::Star: {
      Graph g(order + 1);
      for (int i = 1; i <= order; ++i) g.add_edge(0, i);
      return g;
    }
    case PatternKind::Kipas: {
      Graph g(order + 1);
      for (int i = 1; i <= order; ++i) {
        g.add_edge(0, i);
        if (i > 1) g.add_edge(i - 1, i);
      }
      return g;
    }
    case PatternKind::LinearForestExact: {
      Graph g(order);
      int base = 0;
      for (int c : components) {
        for (int i = 0; i + 1 < c; ++i) g.add_edge(base + i, base + i + 1);
        base += c;
      }
      return g;
    }
    case PatternKind::Complete: {
      Graph g(order);
      for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
      return g;
    }
    case PatternKind::Explicit:
      return graph;
    case PatternKind::LinearForestMinEdges:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("bad pattern '" + std::string(whole) + "': expected an integer, got '" + std::string(s) + "'");
  return value;
}

}  // namespace

PatternSpec parse_pattern(std::string_view text) {
  if (text == "p4plus") return PatternSpec::p4plus();
  if (text == "p5") return PatternSpec::path(5);
  if (text == "k13") return PatternSpec::star(3);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("bad pattern '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (head == "path") return PatternSpec::path(parse_int(rest, text));
  if (head == "star") return PatternSpec::star(parse_int(rest, text));
  if (head == "kipas") return PatternSpec::kipas(parse_int(rest, text));
  if (head == "k") return PatternSpec::complete(parse_int(rest, text));
  if (head == "lfx") {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto plus = rest.find('+', pos);
      if (plus == std::string_view::npos) plus = rest.size();
      parts.push_back(parse_int(rest.substr(pos, plus - pos), text));
      pos = plus + 1;
    }
    return PatternSpec::linear_forest_exact(std::move(parts));
  }
  if (head == "lf") {
    int min_edges = -1;
    int min_order = 2;
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string_view::npos) comma = rest.size();
      const std::string_view item = rest.substr(pos, comma - pos);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw DomainError("bad pattern '" + std::string(text) + "'");
      const std::string_view key = item.substr(0, eq);
      const int value = parse_int(item.substr(eq + 1), text);
      if (key == "minedges")
        min_edges = value;
      else if (key == "minorder")
        min_order = value;
      else
        throw DomainError("bad pattern '" + std::string(text) + "': unknown key '" + std::string(key) + "'");
      pos = comma + 1;
    }
    if (min_edges < 0) throw DomainError("bad pattern '" + std::string(text) + "': minedges is required");
    return PatternSpec::linear_forest(min_edges, min_order);
  }
  throw DomainError("bad pattern '" + std::string(text) + "': unknown kind '" + std::string(head) + "'");
}

std::string to_string(const PatternSpec& p) {
  switch (p.kind) {
    case PatternKind::Path:
      return "path:" + std::to_string(p.order);
    case PatternKind::Star:
      return "star:" + std::to_string(p.order);
    case PatternKind::Kipas:
      return "kipas:" + std::to_string(p.order);
    case PatternKind::Complete:
      return "k:" + std::to_string(p.order);
    case PatternKind::LinearForestMinEdges:
      return "lf:minedges=" + std::to_string(p.min_edges) + ",minorder=" + std::to_string(p.min_component_order);
    case PatternKind::LinearForestExact: {
      std::string s = "lfx:";
      for (std::size_t i = 0; i < p.components.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(p.components[i]);
      }
      return s;
    }
    case PatternKind::Explicit:
      return p.name.empty() ? "explicit" : p.name;
  }
  return "?";
}

int ForestWitness::total_order() const {
  int total = 0;
  for (const auto& c : components) total += static_cast<int>(c.size());
  return total;
}

// ---- longest paths ----------------------------------------------------------

namespace {

// reach[m] holds the vertices v such that G[m] has a Hamiltonian path ending at v.
// Returns the largest order seen; stops as soon as `stop_order` is reached when positive.
int fill_reach(const Graph& g, std::vector<VertexMask>& reach, int stop_order) {
  const int s = g.order();
  const std::size_t size = std::size_t{1} << s;
  reach.assign(size, 0);
  int best = s > 0 ? 1 : 0;
  if (stop_order > 0 && best >= stop_order) return best;
  for (int v = 0; v < s; ++v) reach[bit(v)] = bit(v);
  const auto& adj = g.adjacency();
  for (std::size_t mask = 1; mask < size; ++mask) {
    const VertexMask ends = reach[mask];
    if (!ends) continue;
    const VertexMask m = static_cast<VertexMask>(mask);
    const int here = popcount(m);
    if (here > best) {
      best = here;
      if (stop_order > 0 && best >= stop_order) return best;
    }
    for (VertexMask e = ends; e; e &= e - 1) {
      for (VertexMask w = adj[lowest(e)] & ~m; w; w &= w - 1) reach[m | bit(lowest(w))] |= bit(lowest(w));
    }
  }
  return best;
}

std::vector<VertexMask>& scratch() {
  thread_local std::vector<VertexMask> buffer;
  return buffer;
}

// Does some R with w in R, R a subset of `avail`, |R| = r, admit a Hamiltonian path of G[R] starting at w?
bool extendable(const std::vector<VertexMask>& reach, VertexMask avail, int w, int r) {
  const VertexMask rest = avail & ~bit(w);
  if (r == 1) return true;
  std::vector<int> pos;
  for (VertexMask m = rest; m; m &= m - 1) pos.push_back(lowest(m));
  const int m = static_cast<int>(pos.size());
  const int pick = r - 1;
  if (pick > m) return false;
  // Gosper's hack over index subsets of size `pick`.
  std::uint64_t comb = (std::uint64_t{1} << pick) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (comb < limit) {
    VertexMask set = bit(w);
    for (std::uint64_t c = comb; c; c &= c - 1) set |= bit(pos[std::countr_zero(c)]);
    if (reach[set] & bit(w)) return true;
    const std::uint64_t low = comb & (~comb + 1);
    const std::uint64_t ripple = comb + low;
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
  }
  return false;
}

// Lexicographically smallest path of exactly `order` vertices in a graph of at most kPathDpLimit vertices.
std::vector<int> dp_path(const Graph& h, int order) {
  auto& reach = scratch();
  const int best = fill_reach(h, reach, 0);
  if (order > best || order < 1) return {};
  const int s = h.order();
  VertexMask starts = 0;
  const std::size_t size = std::size_t{1} << s;
  for (std::size_t mask = 1; mask < size; ++mask)
    if (popcount(static_cast<VertexMask>(mask)) == order) starts |= reach[mask];
  std::vector<int> path{lowest(starts)};
  VertexMask used = bit(path[0]);
  const VertexMask all = low_mask(s);
  for (int step = 1; step < order; ++step) {
    const int remaining = order - step;
    bool moved = false;
    for (VertexMask cand = h.neighbors(path.back()) & ~used; cand; cand &= cand - 1) {
      const int w = lowest(cand);
      if (extendable(reach, all & ~used, w, remaining)) {
        path.push_back(w);
        used |= bit(w);
        moved = true;
        break;
      }
    }
    if (!moved) return {};  // unreachable for a consistent table
  }
  return path;
}

// Depth-first search in lexicographic order for components too large for the DP.
class PathDfs {
 public:
  PathDfs(const Graph& h, int target, long long budget) : h_(h), target_(target), budget_(budget) {}

  std::vector<int> run() {
    for (int s = 0; s < h_.order() && static_cast<int>(best_.size()) < target_; ++s) {
      current_ = {s};
      visit(bit(s));
    }
    return best_;
  }

 private:
  VertexMask reachable(int from, VertexMask used) const {
    VertexMask seen = bit(from);
    VertexMask frontier = seen;
    while (frontier) {
      const int v = lowest(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = h_.neighbors(v) & ~used & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen;
  }

  bool visit(VertexMask used) {
    if (--budget_ < 0) throw CapabilityError("longest-path search exceeded its node budget");
    if (current_.size() > best_.size()) best_ = current_;
    if (static_cast<int>(best_.size()) >= target_) return true;
    const int last = current_.back();
    const int bound = static_cast<int>(current_.size()) - 1 + popcount(reachable(last, used));
    if (bound <= static_cast<int>(best_.size())) return false;
    for (VertexMask cand = h_.neighbors(last) & ~used; cand; cand &= cand - 1) {
      const int w = lowest(cand);
      current_.push_back(w);
      const bool done = visit(used | bit(w));
      current_.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Graph& h_;
  int target_;
  long long budget_;
  std::vector<int> current_;
  std::vector<int> best_;
};

constexpr long long kDfsBudget = 200'000'000;

// Lexicographically smallest path of `order` vertices inside one component (relabelled).
std::vector<int> component_path(const Graph& h, int order) {
  if (h.order() <= kPathDpLimit) return dp_path(h, order);
  auto p = PathDfs(h, order, kDfsBudget).run();
  if (static_cast<int>(p.size()) < order) return {};
  p.resize(static_cast<std::size_t>(order));
  return p;
}

int component_longest(const Graph& h, int stop_order) {
  if (h.order() <= kPathDpLimit) return fill_reach(h, scratch(), stop_order);
  const int target = stop_order > 0 ? std::min(stop_order, h.order()) : h.order();
  return static_cast<int>(PathDfs(h, target, kDfsBudget).run().size());
}

bool has_path_of_order(const Graph& g, int order) {
  if (order <= 1) return g.order() >= order;
  for (VertexMask comp : g.components()) {
    if (popcount(comp) < order) continue;
    if (component_longest(g.induced(comp), order) >= order) return true;
  }
  return false;
}

}  // namespace

int longest_path_order(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (VertexMask comp : g.components()) {
    if (popcount(comp) <= best) continue;
    best = std::max(best, component_longest(g.induced(comp), 0));
  }
  return best;
}

std::vector<int> find_path(const Graph& g, int order) {
  if (order < 1 || order > g.order()) return {};
  if (order == 1) return {0};
  std::vector<int> best;
  for (VertexMask comp : g.components()) {
    if (popcount(comp) < order) continue;
    std::vector<int> labels;
    const Graph h = g.induced(comp, &labels);
    auto p = component_path(h, order);
    if (p.empty()) continue;
    for (int& v : p) v = labels[v];
    if (best.empty() || p < best) best = std::move(p);
  }
  return best;
}

std::vector<int> longest_path(const Graph& g) { return find_path(g, longest_path_order(g)); }

// ---- generic backtracking embedding ------------------------------------------

namespace {

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern), map_(pattern.order(), -1) {
    for (int i = 0; i < pat_.order(); ++i) earlier_[i] = pat_.neighbors(i) & low_mask(i);
  }

  std::optional<std::vector<int>> run() {
    if (pat_.order() > host_.order()) return std::nullopt;
    if (place(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool place(int i, VertexMask used) {
    if (i == pat_.order()) return true;
    VertexMask cand = low_mask(host_.order()) & ~used;
    for (VertexMask e = earlier_[i]; e; e &= e - 1) cand &= host_.neighbors(map_[lowest(e)]);
    const int need = pat_.degree(i);
    for (; cand; cand &= cand - 1) {
      const int v = lowest(cand);
      if (host_.degree(v) < need) continue;
      map_[i] = v;
      if (place(i + 1, used | bit(v))) return true;
    }
    map_[i] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  std::vector<int> map_;
  std::array<VertexMask, kMaxVertices> earlier_{};
};

class RainbowEmbedder {
 public:
  RainbowEmbedder(const EdgeColoring& host, const Graph& pattern)
      : host_(host), pat_(pattern), map_(pattern.order(), -1) {
    for (int i = 0; i < pat_.order(); ++i) earlier_[i] = pat_.neighbors(i) & low_mask(i);
  }

  std::optional<std::vector<int>> run() {
    if (pat_.order() > host_.order()) return std::nullopt;
    if (place(0, 0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool place(int i, VertexMask used, std::uint64_t colors) {
    if (i == pat_.order()) return true;
    for (int v = 0; v < host_.order(); ++v) {
      if (used & bit(v)) continue;
      std::uint64_t next = colors;
      bool ok = true;
      for (VertexMask e = earlier_[i]; e; e &= e - 1) {
        const std::uint64_t c = std::uint64_t{1} << host_.color(v, map_[lowest(e)]);
        if (next & c) {
          ok = false;
          break;
        }
        next |= c;
      }
      if (!ok) continue;
      map_[i] = v;
      if (place(i + 1, used | bit(v), next)) return true;
    }
    map_[i] = -1;
    return false;
  }

  const EdgeColoring& host_;
  const Graph& pat_;
  std::vector<int> map_;
  std::array<VertexMask, kMaxVertices> earlier_{};
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Graph& g, const PatternSpec& p) {
  if (p.vertex_count() > g.order()) return std::nullopt;
  switch (p.kind) {
    case PatternKind::Path: {
      auto path = find_path(g, p.order);
      if (path.empty()) return std::nullopt;
      return path;
    }
    case PatternKind::Kipas: {
      for (int v = 0; v < g.order(); ++v) {
        const VertexMask nb = g.neighbors(v);
        if (popcount(nb) < p.order) continue;
        std::vector<int> labels;
        const Graph h = g.induced(nb, &labels);
        auto path = find_path(h, p.order);
        if (path.empty()) continue;
        std::vector<int> map{v};
        for (int x : path) map.push_back(labels[x]);
        return map;
      }
      return std::nullopt;
    }
    case PatternKind::Star: {
      for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < p.order) continue;
        std::vector<int> map{v};
        for (VertexMask m = g.neighbors(v); m && static_cast<int>(map.size()) <= p.order; m &= m - 1)
          map.push_back(lowest(m));
        return map;
      }
      return std::nullopt;
    }
    case PatternKind::LinearForestMinEdges:
      throw CapabilityError("find_embedding does not handle linear-forest families; use max_linear_forest");
    case PatternKind::LinearForestExact:
    case PatternKind::Complete:
    case PatternKind::Explicit: {
      const Graph pat = *p.as_graph();
      return Embedder(g, pat).run();
    }
  }
  return std::nullopt;
}

// ---- maximum linear forest ---------------------------------------------------

namespace {

class ForestSearch {
 public:
  ForestSearch(const Graph& g, int min_order, int stop_at)
      : n_(g.order()), edges_(g.edges()), min_order_(min_order), stop_at_(stop_at) {
    const std::size_t e = edges_.size();
    suffix_.assign(e + 1, {});
    for (std::size_t i = e; i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      ++suffix_[i][edges_[i].first];
      ++suffix_[i][edges_[i].second];
    }
    for (int v = 0; v < n_; ++v) {
      other_end_[v] = v;
      path_edges_[v] = 0;
    }
    ceiling_ = std::max(0, n_ - 1);
  }

  std::vector<std::pair<int, int>> run() {
    recurse(0);
    return best_edges_;
  }

  int best_value() const { return best_value_; }

 private:
  int value() const { return min_order_ == 2 ? edge_count_ : edge_count_ - singles_; }

  bool done() const { return best_value_ >= stop_at_ || best_value_ >= ceiling_; }

  void recurse(std::size_t i) {
    const int v = value();
    if (v > best_value_) {
      best_value_ = v;
      best_edges_ = chosen_;
      if (done()) return;
    }
    if (i == edges_.size()) return;

    int slack = 0;
    for (int x = 0; x < n_; ++x) slack += std::min(2 - degree_[x], static_cast<int>(suffix_[i][x]));
    const int can_add = std::min(static_cast<int>(edges_.size() - i), slack / 2);
    if (edge_count_ + can_add <= best_value_) return;

    const auto [a, b] = edges_[i];
    if (degree_[a] < 2 && degree_[b] < 2 && other_end_[a] != b) {
      // Join the paths ending at a and b.
      const int ea = other_end_[a], eb = other_end_[b];
      const int pa = path_edges_[a], pb = path_edges_[b];
      const int joined = pa + pb + 1;
      const int saved_singles = singles_;
      singles_ += (joined == 1) - (pa == 1) - (pb == 1);
      const int old_ea = other_end_[ea], old_eb = other_end_[eb];
      const int old_pea = path_edges_[ea], old_peb = path_edges_[eb];
      other_end_[ea] = eb;
      other_end_[eb] = ea;
      path_edges_[ea] = joined;
      path_edges_[eb] = joined;
      ++degree_[a];
      ++degree_[b];
      ++edge_count_;
      chosen_.push_back(edges_[i]);

      recurse(i + 1);

      chosen_.pop_back();
      --edge_count_;
      --degree_[a];
      --degree_[b];
      other_end_[ea] = old_ea;
      other_end_[eb] = old_eb;
      path_edges_[ea] = old_pea;
      path_edges_[eb] = old_peb;
      // a and b are endpoints of their original paths again.
      other_end_[a] = ea;
      other_end_[ea] = a;
      other_end_[b] = eb;
      other_end_[eb] = b;
      path_edges_[a] = path_edges_[ea] = pa;
      path_edges_[b] = path_edges_[eb] = pb;
      singles_ = saved_singles;
      if (done()) return;
    }
    recurse(i + 1);
  }

  int n_;
  std::vector<std::pair<int, int>> edges_;
  int min_order_;
  int stop_at_;
  int ceiling_ = 0;
  std::vector<std::array<std::uint8_t, kMaxVertices>> suffix_;
  std::array<int, kMaxVertices> degree_{};
  std::array<int, kMaxVertices> other_end_{};
  std::array<int, kMaxVertices> path_edges_{};
  int edge_count_ = 0;
  int singles_ = 0;
  std::vector<std::pair<int, int>> chosen_;
  std::vector<std::pair<int, int>> best_edges_;
  int best_value_ = 0;
};

ForestWitness assemble_forest(int n, const std::vector<std::pair<int, int>>& edges, int min_order) {
  Graph f(n);
  for (auto [u, v] : edges) f.add_edge(u, v);
  ForestWitness w;
  VertexMask seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen & bit(s)) || f.degree(s) != 1) continue;
    std::vector<int> comp{s};
    seen |= bit(s);
    int prev = -1, cur = s;
    for (;;) {
      VertexMask next = f.neighbors(cur);
      if (prev >= 0) next &= ~bit(prev);
      if (!next) break;
      prev = cur;
      cur = lowest(next);
      comp.push_back(cur);
      seen |= bit(cur);
    }
    if (static_cast<int>(comp.size()) >= min_order) w.components.push_back(std::move(comp));
  }
  return w;
}

}  // namespace

ForestWitness max_linear_forest(const Graph& g, int min_component_order, int stop_at) {
  if (min_component_order != 2 && min_component_order != 3)
    throw DomainError("minimum component order must be 2 or 3");
  if (g.order() > kForestSearchLimit)
    throw CapabilityError("linear-forest search supports at most " + std::to_string(kForestSearchLimit) +
                          " vertices, got " + std::to_string(g.order()));
  ForestSearch search(g, min_component_order, stop_at);
  const auto edges = search.run();
  return assemble_forest(g.order(), edges, min_component_order);
}

bool contains(const Graph& g, const PatternSpec& p) {
  if (p.vertex_count() > g.order()) return false;
  switch (p.kind) {
    case PatternKind::Path:
      return has_path_of_order(g, p.order);
    case PatternKind::Star:
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= p.order) return true;
      return false;
    case PatternKind::Kipas:
      for (int v = 0; v < g.order(); ++v) {
        const VertexMask nb = g.neighbors(v);
        if (popcount(nb) >= p.order && has_path_of_order(g.induced(nb), p.order)) return true;
      }
      return false;
    case PatternKind::LinearForestMinEdges:
      if (g.edge_count() < p.min_edges) return false;
      return max_linear_forest(g, p.min_component_order, p.min_edges).edge_count() >= p.min_edges;
    default:
      return find_embedding(g, p).has_value();
  }
}

// ---- coloring-level ----------------------------------------------------------

PathResult longest_mono_path(const EdgeColoring& coloring, Color c) {
  const Graph g = color_class(coloring, c).graph;
  auto path = longest_path(g);
  PathResult r;
  r.order = static_cast<int>(path.size());
  r.witness.pattern = PatternSpec::path(std::max(1, r.order));
  r.witness.vertex_map = std::move(path);
  r.witness.color = c;
  return r;
}

std::optional<Embedding> has_mono_pattern(const EdgeColoring& coloring, Color c, const PatternSpec& p) {
  const Graph g = color_class(coloring, c).graph;
  if (p.kind == PatternKind::LinearForestMinEdges) {
    if (p.vertex_count() > g.order()) return std::nullopt;
    auto w = max_linear_forest(g, p.min_component_order, p.min_edges);
    if (w.edge_count() < p.min_edges) return std::nullopt;
    std::stable_sort(w.components.begin(), w.components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<int> orders;
    Embedding e;
    for (const auto& comp : w.components) {
      orders.push_back(static_cast<int>(comp.size()));
      e.vertex_map.insert(e.vertex_map.end(), comp.begin(), comp.end());
    }
    e.pattern = PatternSpec::linear_forest_exact(std::move(orders));
    e.color = c;
    return e;
  }
  auto map = find_embedding(g, p);
  if (!map) return std::nullopt;
  return Embedding{p, std::move(*map), c};
}

std::optional<Embedding> has_mono_pattern_any(const EdgeColoring& coloring, const PatternSpec& p) {
  for (Color c = 1; c <= coloring.num_colors(); ++c)
    if (auto e = has_mono_pattern(coloring, c, p)) return e;
  return std::nullopt;
}

ForestResult max_linear_forest(const EdgeColoring& coloring, Color c, int min_component_order) {
  const Graph g = color_class(coloring, c).graph;
  ForestResult r;
  r.witness = max_linear_forest(g, min_component_order);
  r.edges = r.witness.edge_count();
  return r;
}

std::optional<Embedding> has_rainbow(const EdgeColoring& coloring, const PatternSpec& p) {
  const auto pat = p.as_graph();
  if (!pat) throw CapabilityError("rainbow detection needs a fixed-shape pattern");
  if (pat->order() > 8) throw CapabilityError("rainbow detection supports patterns with at most 8 vertices");
  auto map = RainbowEmbedder(coloring, *pat).run();
  if (!map) return std::nullopt;
  return Embedding{p, std::move(*map), std::nullopt};
}

bool validate_embedding(const EdgeColoring& coloring, const Embedding& e) {
  const auto pat = e.pattern.as_graph();
  if (!pat || static_cast<int>(e.vertex_map.size()) != pat->order()) return false;
  VertexMask used = 0;
  for (int v : e.vertex_map) {
    if (v < 0 || v >= coloring.order() || (used & bit(v))) return false;
    used |= bit(v);
  }
  std::uint64_t seen = 0;
  for (auto [a, b] : pat->edges()) {
    const Color c = coloring.color(e.vertex_map[a], e.vertex_map[b]);
    if (e.color) {
      if (c != *e.color) return false;
    } else {
      if (seen & (std::uint64_t{1} << c)) return false;
      seen |= std::uint64_t{1} << c;
    }
  }
  return true;
}

bool validate_forest(const EdgeColoring& coloring, Color c, const ForestWitness& w, int min_component_order) {
  VertexMask used = 0;
  for (const auto& comp : w.components) {
    if (static_cast<int>(comp.size()) < min_component_order) return false;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const int v = comp[i];
      if (v < 0 || v >= coloring.order() || (used & bit(v))) return false;
      used |= bit(v);
      if (i > 0 && coloring.color(comp[i - 1], v) != c) return false;
    }
  }
  return true;
}

}  // namespace kipas
