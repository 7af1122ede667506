#include "kipas/structure.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "kipas/errors.hpp"
#include "kipas/graph.hpp"

namespace kipas {

namespace {

constexpr Color kCross[3][3] = {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}};
constexpr Color kInside[3][2] = {{1, 3}, {1, 2}, {2, 3}};

bool identity_map(const std::vector<Color>& map) {
  for (std::size_t f = 1; f < map.size(); ++f)
    if (map[f] != static_cast<Color>(f)) return false;
  return true;
}

// Accepts a candidate only if it rebuilds the coloring; in fixed mode the
// renumbering must also be the identity.
std::optional<FamilyDescriptor> accept(const EdgeColoring& g, FamilyDescriptor d, bool fixed) {
  if (fixed) {
    if (!d.color_map.empty() && !identity_map(d.color_map)) return std::nullopt;
    d.color_map.clear();
  }
  if (!descriptor_matches(g, d)) return std::nullopt;
  return d;
}

std::vector<std::vector<std::pair<int, int>>> edges_by_color(const EdgeColoring& g) {
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(g.num_colors()) + 1);
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u) out[static_cast<std::size_t>(g.color(u, v))].emplace_back(u, v);
  return out;
}

VertexMask support(const std::vector<std::pair<int, int>>& edges) {
  VertexMask m = 0;
  for (auto [u, v] : edges) m |= bit(u) | bit(v);
  return m;
}

std::vector<int> members(VertexMask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

int family_index(const std::vector<Color>& map, Color actual) {
  for (std::size_t f = 1; f < map.size(); ++f)
    if (map[f] == actual) return static_cast<int>(f);
  return 0;
}

// ---- dominant color / B_k --------------------------------------------------

// `others` lists the actual colors playing family colors 2, 3, ...; their
// supports become the parts. Free vertices top up parts below `min_part` and
// the rest join the first part.
std::optional<FamilyDescriptor> dominant_candidate(const EdgeColoring& g, Color dominant,
                                                   const std::vector<Color>& others, int min_part, Family family) {
  const auto by_color = edges_by_color(g);
  VertexMask used = 0;
  std::vector<std::vector<int>> parts;
  for (Color c : others) {
    const VertexMask s = support(by_color[static_cast<std::size_t>(c)]);
    if (s & used) return std::nullopt;
    used |= s;
    parts.push_back(members(s));
  }
  if (parts.empty()) return std::nullopt;
  std::vector<int> free = members(low_mask(g.order()) & ~used);
  std::size_t next_free = 0;
  for (auto& p : parts) {
    while (static_cast<int>(p.size()) < min_part) {
      if (next_free == free.size()) return std::nullopt;
      p.push_back(free[next_free++]);
    }
  }
  for (; next_free < free.size(); ++next_free) parts[0].push_back(free[next_free]);
  for (auto& p : parts) std::sort(p.begin(), p.end());

  FamilyDescriptor d;
  d.family = family;
  d.n = g.order();
  d.k = static_cast<int>(others.size()) + 1;
  d.parts = std::move(parts);
  d.color_map = {0, dominant};
  d.color_map.insert(d.color_map.end(), others.begin(), others.end());
  for (std::size_t f = 2; f < d.color_map.size(); ++f)
    for (auto [u, v] : by_color[static_cast<std::size_t>(d.color_map[f])])
      d.choices.push_back({u, v, static_cast<Color>(f)});
  return d;
}

std::optional<FamilyDescriptor> match_dominant(const EdgeColoring& g) {
  const auto used = colors_used(g);
  if (used.size() < 2) return std::nullopt;
  for (Color d : used) {
    std::vector<Color> others;
    for (Color c : used)
      if (c != d) others.push_back(c);
    if (auto desc = dominant_candidate(g, d, others, 0, Family::Dominant)) {
      if (auto ok = accept(g, *desc, false)) return ok;
    }
  }
  return std::nullopt;
}

std::optional<FamilyDescriptor> member_bk(const EdgeColoring& g, Family family) {
  const int k = g.num_colors();
  if (k < (family == Family::Bk ? 3 : 2)) return std::nullopt;
  std::vector<Color> others(static_cast<std::size_t>(k - 1));
  std::iota(others.begin(), others.end(), 2);
  auto desc = dominant_candidate(g, 1, others, family == Family::Bk ? 2 : 0, family);
  if (!desc) return std::nullopt;
  return accept(g, *desc, true);
}

// ---- T / G1 via 2-SAT --------------------------------------------------------

class TwoSat {
 public:
  explicit TwoSat(int vars) : n_(vars), adj_(static_cast<std::size_t>(2 * vars)) {}

  // (x_a == va) or (x_b == vb)
  void clause(int a, bool va, int b, bool vb) {
    adj_[static_cast<std::size_t>(lit(a, !va))].push_back(lit(b, vb));
    adj_[static_cast<std::size_t>(lit(b, !vb))].push_back(lit(a, va));
  }

  std::optional<std::vector<bool>> solve() const {
    const int m = 2 * n_;
    std::vector<int> index(static_cast<std::size_t>(m), -1), low(static_cast<std::size_t>(m), 0),
        comp(static_cast<std::size_t>(m), -1);
    std::vector<int> stack;
    std::vector<char> on_stack(static_cast<std::size_t>(m), 0);
    int counter = 0, comps = 0;
    std::function<void(int)> dfs = [&](int v) {
      const auto sv = static_cast<std::size_t>(v);
      index[sv] = low[sv] = counter++;
      stack.push_back(v);
      on_stack[sv] = 1;
      for (int w : adj_[sv]) {
        const auto sw = static_cast<std::size_t>(w);
        if (index[sw] == -1) {
          dfs(w);
          low[sv] = std::min(low[sv], low[sw]);
        } else if (on_stack[sw]) {
          low[sv] = std::min(low[sv], index[sw]);
        }
      }
      if (low[sv] == index[sv]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = comps;
        } while (w != v);
        ++comps;
      }
    };
    for (int v = 0; v < m; ++v)
      if (index[static_cast<std::size_t>(v)] == -1) dfs(v);
    std::vector<bool> value(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      const int t = comp[static_cast<std::size_t>(lit(x, true))], f = comp[static_cast<std::size_t>(lit(x, false))];
      if (t == f) return std::nullopt;
      // Tarjan numbers components in reverse topological order.
      value[static_cast<std::size_t>(x)] = t < f;
    }
    return value;
  }

 private:
  static int lit(int x, bool v) { return 2 * x + (v ? 0 : 1); }
  int n_;
  std::vector<std::vector<int>> adj_;
};

bool tcompat(int p, int q, Color c) {
  if (c == 0) return false;
  if (p == q) return c == kInside[p][0] || c == kInside[p][1];
  return c == kCross[p][q];
}

// Three-part assignment for family colors `fc` (0 = color outside the family).
// `need_nonempty` lists how many of the two parts other than vertex 0's must be
// nonempty (2 for T, 1 for G1).
std::optional<std::vector<int>> three_part_assignment(int n, const std::vector<Color>& fc, int need_nonempty) {
  if (n < 1) return std::nullopt;
  auto col = [&](int u, int v) { return fc[pair_rank(std::min(u, v), std::max(u, v))]; };
  for (int p0 = 0; p0 < 3; ++p0) {
    // Options for every vertex given vertex 0 sits in p0.
    std::vector<std::array<int, 2>> opt(static_cast<std::size_t>(n));
    opt[0] = {p0, p0};
    bool dead = false;
    for (int v = 1; v < n && !dead; ++v) {
      std::vector<int> d;
      for (int q = 0; q < 3; ++q)
        if (tcompat(p0, q, col(0, v))) d.push_back(q);
      if (d.empty()) dead = true;
      else opt[static_cast<std::size_t>(v)] = {d[0], d.back()};
    }
    if (dead) continue;
    TwoSat base(n);
    base.clause(0, true, 0, true);
    for (int v = 1; v < n; ++v)
      if (opt[static_cast<std::size_t>(v)][0] == opt[static_cast<std::size_t>(v)][1]) base.clause(v, true, v, true);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            if (!tcompat(opt[static_cast<std::size_t>(u)][static_cast<std::size_t>(a)],
                         opt[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)], col(u, v)))
              base.clause(u, a != 0, v, b != 0);

    auto force = [&](TwoSat& s, int x, int q) {
      const auto& o = opt[static_cast<std::size_t>(x)];
      if (o[0] == q) s.clause(x, true, x, true);
      else if (o[1] == q) s.clause(x, false, x, false);
      else return false;
      return true;
    };
    auto decode = [&](const std::vector<bool>& val) {
      std::vector<int> part(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v)
        part[static_cast<std::size_t>(v)] = opt[static_cast<std::size_t>(v)][val[static_cast<std::size_t>(v)] ? 0 : 1];
      return part;
    };
    const int q1 = (p0 + 1) % 3, q2 = (p0 + 2) % 3;
    if (need_nonempty == 0) {
      if (auto val = base.solve()) return decode(*val);
      continue;
    }
    if (need_nonempty == 2) {
      for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
          if (x == y) continue;
          TwoSat s = base;
          if (!force(s, x, q1) || !force(s, y, q2)) continue;
          if (auto val = s.solve()) return decode(*val);
        }
      continue;
    }
    for (int q : {q1, q2})
      for (int x = 1; x < n; ++x) {
        TwoSat s = base;
        if (!force(s, x, q)) continue;
        if (auto val = s.solve()) return decode(*val);
      }
  }
  return std::nullopt;
}

std::optional<FamilyDescriptor> match_three_part(const EdgeColoring& g, Family family, bool fixed) {
  const int need = family == Family::T ? 2 : 1;
  std::vector<Color> used = colors_used(g);
  std::vector<std::vector<Color>> maps;
  if (fixed) {
    if (g.num_colors() != 3) return std::nullopt;
    maps.push_back({0, 1, 2, 3});
  } else {
    if (used.size() != 3) return std::nullopt;
    std::vector<Color> perm = used;
    do maps.push_back({0, perm[0], perm[1], perm[2]});
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  const int n = g.order();
  for (const auto& map : maps) {
    std::vector<Color> fc(pair_count(n));
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) fc[pair_rank(u, v)] = family_index(map, g.color(u, v));
    auto part = three_part_assignment(n, fc, need);
    if (!part) continue;
    FamilyDescriptor d;
    d.family = family;
    d.n = n;
    d.k = 3;
    d.parts.assign(3, {});
    for (int v = 0; v < n; ++v) d.parts[static_cast<std::size_t>((*part)[static_cast<std::size_t>(v)])].push_back(v);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        const int p = (*part)[static_cast<std::size_t>(u)];
        const Color f = fc[pair_rank(u, v)];
        if (p == (*part)[static_cast<std::size_t>(v)] && f != kInside[p][0]) d.choices.push_back({u, v, f});
      }
    d.color_map = map;
    if (auto ok = accept(g, d, fixed)) return ok;
  }
  return std::nullopt;
}

// ---- G2 / G3 -----------------------------------------------------------------

std::vector<Color> single_edge_colors(const std::vector<std::vector<std::pair<int, int>>>& by_color) {
  std::vector<Color> out;
  for (std::size_t c = 1; c < by_color.size(); ++c)
    if (by_color[c].size() == 1) out.push_back(static_cast<Color>(c));
  return out;
}

// Color of some pair avoiding every vertex in `avoid`, or 0.
Color color_away_from(const EdgeColoring& g, VertexMask avoid) {
  const auto rest = members(low_mask(g.order()) & ~avoid);
  if (rest.size() < 2) return 0;
  return g.color(rest[0], rest[1]);
}

int vertex_outside(const EdgeColoring& g, VertexMask avoid) {
  const VertexMask rest = low_mask(g.order()) & ~avoid;
  return rest ? lowest(rest) : -1;
}

std::optional<FamilyDescriptor> match_g2(const EdgeColoring& g, bool fixed) {
  const auto by_color = edges_by_color(g);
  for (Color c2 : single_edge_colors(by_color)) {
    const auto [p, q] = by_color[static_cast<std::size_t>(c2)][0];
    for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
      const int z = vertex_outside(g, bit(x) | bit(y));
      if (z < 0) continue;
      Color c1 = color_away_from(g, bit(x) | bit(y));
      if (c1 == 0) c1 = fixed ? 1 : 0;
      if (c1 == 0) continue;
      FamilyDescriptor d;
      d.family = Family::G2;
      d.n = g.order();
      d.k = 4;
      d.special = {x, y};
      d.color_map = {0, c1, c2, g.color(x, z), g.color(y, z)};
      if (auto ok = accept(g, d, fixed)) return ok;
    }
  }
  return std::nullopt;
}

std::optional<FamilyDescriptor> match_g3(const EdgeColoring& g, bool fixed) {
  const auto by_color = edges_by_color(g);
  for (Color c2 : single_edge_colors(by_color)) {
    const auto [p, q] = by_color[static_cast<std::size_t>(c2)][0];
    for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      for (int c = 0; c < g.order(); ++c) {
        if (c == a || c == b) continue;
        Color c1 = color_away_from(g, bit(a) | bit(b) | bit(c));
        if (c1 == 0) c1 = fixed ? 1 : 0;
        if (c1 == 0) continue;
        FamilyDescriptor d;
        d.family = Family::G3;
        d.n = g.order();
        d.k = 4;
        d.special = {a, b, c};
        d.color_map = {0, c1, c2, g.color(b, c), g.color(a, c)};
        if (auto ok = accept(g, d, fixed)) return ok;
      }
    }
  }
  return std::nullopt;
}

// ---- shapes (ii)-(v) ---------------------------------------------------------

bool distinct_colors(const std::vector<Color>& map) {
  for (std::size_t i = 1; i < map.size(); ++i) {
    if (map[i] == 0) return false;
    for (std::size_t j = 1; j < i; ++j)
      if (map[i] == map[j]) return false;
  }
  return true;
}

std::optional<FamilyDescriptor> match_shape2(const EdgeColoring& g, bool fixed) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  const auto used = colors_used(g);
  for (int a = 0; a < n; ++a) {
    const Color c1 = color_away_from(g, bit(a));
    std::vector<Color> map{0, c1};
    if (fixed) {
      map.resize(static_cast<std::size_t>(g.num_colors()) + 1);
      std::iota(map.begin(), map.end(), 0);
    } else {
      for (Color c : used)
        if (c != c1) map.push_back(c);
    }
    if (map.size() < 3) continue;
    FamilyDescriptor d;
    d.family = Family::Shape2;
    d.n = n;
    d.k = static_cast<int>(map.size()) - 1;
    d.special = {a};
    for (int v = 0; v < n; ++v) {
      if (v == a) continue;
      const int f = family_index(map, g.color(a, v));
      if (f == 0) break;
      if (f != 1) d.choices.push_back({std::min(a, v), std::max(a, v), f});
    }
    d.color_map = map;
    if (auto ok = accept(g, d, fixed)) return ok;
  }
  return std::nullopt;
}

std::optional<FamilyDescriptor> match_shape3(const EdgeColoring& g, bool fixed) {
  const int n = g.order();
  if (n < 4) return std::nullopt;
  const auto by_color = edges_by_color(g);
  const auto singles = single_edge_colors(by_color);
  for (Color c2 : singles)
    for (Color c3 : singles) {
      if (c2 == c3) continue;
      const auto e2 = by_color[static_cast<std::size_t>(c2)][0];
      const auto e3 = by_color[static_cast<std::size_t>(c3)][0];
      const VertexMask shared = (bit(e2.first) | bit(e2.second)) & (bit(e3.first) | bit(e3.second));
      if (popcount(shared) != 1) continue;
      const int a = lowest(shared);
      const int b = e2.first == a ? e2.second : e2.first;
      const int c = e3.first == a ? e3.second : e3.first;
      const int x = vertex_outside(g, bit(a) | bit(b) | bit(c));
      std::vector<Color> map{0, g.color(b, x), c2, c3, g.color(b, c)};
      if (!distinct_colors(map)) continue;
      FamilyDescriptor d;
      d.family = Family::Shape3;
      d.n = n;
      d.k = 4;
      d.special = {a, b, c};
      for (int v = 0; v < n; ++v)
        if (v != a && v != b && v != c && g.color(a, v) == map[4]) d.choices.push_back({std::min(a, v), std::max(a, v), 4});
      d.color_map = map;
      if (auto ok = accept(g, d, fixed)) return ok;
    }
  return std::nullopt;
}

std::optional<FamilyDescriptor> match_shape4(const EdgeColoring& g, bool fixed) {
  const int n = g.order();
  if (n < 5) return std::nullopt;
  const auto by_color = edges_by_color(g);
  for (std::size_t c3 = 1; c3 < by_color.size(); ++c3) {
    const auto& es = by_color[c3];
    if (es.size() != 2) continue;
    for (int swap_edges = 0; swap_edges < 2; ++swap_edges) {
      const auto ac = es[static_cast<std::size_t>(swap_edges)];
      const auto bd = es[static_cast<std::size_t>(1 - swap_edges)];
      for (auto [a, c] : {ac, std::pair{ac.second, ac.first}})
        for (auto [b, dd] : {bd, std::pair{bd.second, bd.first}}) {
          if (popcount(bit(a) | bit(b) | bit(c) | bit(dd)) != 4) continue;
          const int e = vertex_outside(g, bit(a) | bit(b) | bit(c) | bit(dd));
          std::vector<Color> map{0, g.color(a, e), g.color(a, b), static_cast<Color>(c3), g.color(a, dd)};
          if (!distinct_colors(map)) continue;
          FamilyDescriptor d;
          d.family = Family::Shape4;
          d.n = n;
          d.k = 4;
          d.special = {a, b, c, dd};
          if (g.color(c, dd) == map[2]) d.choices.push_back({std::min(c, dd), std::max(c, dd), 2});
          d.color_map = map;
          if (auto ok = accept(g, d, fixed)) return ok;
        }
    }
  }
  return std::nullopt;
}

std::optional<FamilyDescriptor> match_shape5(const EdgeColoring& g, bool fixed) {
  if (g.order() != 5) return std::nullopt;
  std::vector<int> perm{0, 1, 2, 3, 4};
  do {
    const int a = perm[0], b = perm[1], c = perm[2], dd = perm[3], e = perm[4];
    std::vector<Color> map{0, g.color(a, dd), g.color(b, dd), g.color(c, dd), g.color(dd, e)};
    (void)b;
    (void)c;
    if (!distinct_colors(map)) continue;
    FamilyDescriptor d;
    d.family = Family::Shape5;
    d.n = 5;
    d.k = 4;
    d.special = perm;
    d.color_map = map;
    if (auto ok = accept(g, d, fixed)) return ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

RainbowContext parse_context(std::string_view text) {
  if (text == "p5") return RainbowContext::P5;
  if (text == "k13") return RainbowContext::K13;
  if (text == "p4plus") return RainbowContext::P4plus;
  throw DomainError("unknown rainbow context '" + std::string(text) + "' (expected p5, k13 or p4plus)");
}

std::string to_string(RainbowContext c) {
  switch (c) {
    case RainbowContext::P5: return "p5";
    case RainbowContext::K13: return "k13";
    case RainbowContext::P4plus: return "p4plus";
  }
  return "?";
}

bool descriptor_matches(const EdgeColoring& coloring, const FamilyDescriptor& d) {
  if (d.n != coloring.order()) return false;
  try {
    const EdgeColoring built = build_family(d);
    for (int v = 1; v < d.n; ++v)
      for (int u = 0; u < v; ++u)
        if (built.color(u, v) != coloring.color(u, v)) return false;
    return true;
  } catch (const DescriptorError&) {
    return false;
  }
}

Classification classify_structure(const EdgeColoring& coloring, RainbowContext context) {
  const std::size_t used = colors_used(coloring).size();
  const std::size_t need = context == RainbowContext::K13 ? 3 : 4;
  if (used < need) return {};
  if (auto d = match_dominant(coloring)) return {d};
  switch (context) {
    case RainbowContext::P5:
      if (auto d = match_shape2(coloring, false)) return {d};
      if (auto d = match_shape3(coloring, false)) return {d};
      if (auto d = match_shape4(coloring, false)) return {d};
      if (auto d = match_shape5(coloring, false)) return {d};
      break;
    case RainbowContext::K13:
      if (auto d = match_three_part(coloring, Family::G1, false)) return {d};
      break;
    case RainbowContext::P4plus:
      if (auto d = match_g2(coloring, false)) return {d};
      if (auto d = match_g3(coloring, false)) return {d};
      break;
  }
  return {};
}

std::optional<FamilyDescriptor> is_member(const EdgeColoring& coloring, Family family, bool require_all_colors) {
  if (require_all_colors && static_cast<int>(colors_used(coloring).size()) != coloring.num_colors()) return std::nullopt;
  switch (family) {
    case Family::Bk:
    case Family::Dominant:
      return member_bk(coloring, family);
    case Family::T:
    case Family::G1:
      return match_three_part(coloring, family, true);
    case Family::G2:
      return coloring.num_colors() == 4 ? match_g2(coloring, true) : std::nullopt;
    case Family::G3:
      return coloring.num_colors() == 4 ? match_g3(coloring, true) : std::nullopt;
    case Family::Shape2:
      return match_shape2(coloring, true);
    case Family::Shape3:
      return coloring.num_colors() == 4 ? match_shape3(coloring, true) : std::nullopt;
    case Family::Shape4:
      return coloring.num_colors() == 4 ? match_shape4(coloring, true) : std::nullopt;
    case Family::Shape5:
      return coloring.num_colors() == 4 ? match_shape5(coloring, true) : std::nullopt;
  }
  return std::nullopt;
}

bool star_forest_check(const EdgeColoring& coloring, Color c) {
  const Graph h = coloring.color_graph(c);
  for (auto [u, v] : h.edges())
    if (h.degree(u) > 1 && h.degree(v) > 1) return false;
  return true;
}

// ---- multipartite Hamiltonicity ------------------------------------------------

namespace {

using Parts = std::vector<std::vector<int>>;

// Cycle through every vertex of the complete multipartite graph on `parts`,
// assuming the largest part is no bigger than the rest combined. Two parts of
// one vertex each yield the degenerate two-vertex "cycle".
std::vector<int> ham_cycle(Parts parts, const std::vector<int>& part_of) {
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); }), parts.end());
  std::size_t biggest = 0;
  for (const auto& p : parts) biggest = std::max(biggest, p.size());
  if (parts.size() == 2) {
    std::vector<int> seq;
    for (std::size_t i = 0; i < parts[0].size(); ++i) {
      seq.push_back(parts[0][i]);
      seq.push_back(parts[1][i]);
    }
    return seq;
  }
  if (biggest == 1) {
    std::vector<int> seq;
    for (const auto& p : parts) seq.push_back(p[0]);
    return seq;
  }
  // Peel one vertex from every largest part.
  std::vector<int> peeled;
  for (auto& p : parts)
    if (p.size() == biggest) {
      peeled.push_back(p.back());
      p.pop_back();
    }
  std::vector<int> cyc = ham_cycle(parts, part_of);
  const std::size_t len = cyc.size();
  auto part = [&](int v) { return part_of[static_cast<std::size_t>(v)]; };
  for (std::size_t i = 0; i < len; ++i) {
    const int x = cyc[i], y = cyc[(i + 1) % len];
    // Order the peeled clique so its ends fit between x and y.
    std::vector<int> chain = peeled;
    bool ok = false;
    if (chain.size() == 1) {
      ok = part(chain[0]) != part(x) && part(chain[0]) != part(y);
    } else {
      for (std::size_t f = 0; f < chain.size() && !ok; ++f)
        for (std::size_t l = 0; l < chain.size() && !ok; ++l) {
          if (f == l || part(chain[f]) == part(x) || part(chain[l]) == part(y)) continue;
          std::vector<int> mid;
          for (std::size_t j = 0; j < chain.size(); ++j)
            if (j != f && j != l) mid.push_back(chain[j]);
          std::vector<int> ordered{chain[f]};
          ordered.insert(ordered.end(), mid.begin(), mid.end());
          ordered.push_back(chain[l]);
          chain = std::move(ordered);
          ok = true;
        }
    }
    if (!ok) continue;
    std::vector<int> out(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(i + 1));
    out.insert(out.end(), chain.begin(), chain.end());
    out.insert(out.end(), cyc.begin() + static_cast<std::ptrdiff_t>(i + 1), cyc.end());
    return out;
  }
  throw std::logic_error("multipartite_ham: no splice position");
}

}  // namespace

std::vector<int> multipartite_ham(const std::vector<int>& part_sizes, HamMode mode) {
  if (part_sizes.empty()) throw DomainError("multipartite_ham needs at least one part");
  long total = 0;
  int biggest = 0;
  for (int s : part_sizes) {
    if (s < 1) throw DomainError("multipartite_ham part sizes must be positive");
    total += s;
    biggest = std::max(biggest, s);
  }
  const long rest = total - biggest;
  if (mode == HamMode::Cycle) {
    if (total < 3) throw DomainError("a Hamiltonian cycle needs at least 3 vertices");
    if (rest < biggest) throw DomainError("cycle mode needs the largest part no bigger than the others combined");
  } else if (rest != biggest - 1) {
    throw DomainError("path mode needs the other parts to total one less than the largest part");
  }

  Parts parts;
  std::vector<int> part_of;
  int next = 0;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    parts.emplace_back();
    for (int i = 0; i < part_sizes[p]; ++i) {
      parts.back().push_back(next++);
      part_of.push_back(static_cast<int>(p));
    }
  }
  if (mode == HamMode::Cycle) return ham_cycle(parts, part_of);

  if (total == 1) return {0};
  // Drop one vertex of the (unique) largest part; the rest is balanced.
  std::size_t big = 0;
  for (std::size_t p = 0; p < parts.size(); ++p)
    if (parts[p].size() > parts[big].size()) big = p;
  const int w = parts[big].back();
  parts[big].pop_back();
  const std::vector<int> cyc = ham_cycle(parts, part_of);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (part_of[static_cast<std::size_t>(cyc[i])] == static_cast<int>(big)) continue;
    std::vector<int> out{w};
    for (std::size_t j = 0; j < cyc.size(); ++j) out.push_back(cyc[(i + j) % cyc.size()]);
    return out;
  }
  throw std::logic_error("multipartite_ham: no vertex outside the largest part");
}

bool validate_ham(const std::vector<int>& part_sizes, const std::vector<int>& sequence, HamMode mode) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    for (int i = 0; i < part_sizes[p]; ++i) part_of.push_back(static_cast<int>(p));
  if (sequence.size() != part_of.size()) return false;
  std::vector<char> seen(part_of.size(), 0);
  for (int v : sequence) {
    if (v < 0 || static_cast<std::size_t>(v) >= part_of.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const std::size_t len = sequence.size();
  const std::size_t steps = mode == HamMode::Cycle ? len : len - 1;
  for (std::size_t i = 0; i < steps; ++i)
    if (part_of[static_cast<std::size_t>(sequence[i])] == part_of[static_cast<std::size_t>(sequence[(i + 1) % len])])
      return false;
  return true;
}

}  // namespace kipas
