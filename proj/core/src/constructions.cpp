#include "kipas/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "kipas/errors.hpp"
#include "kipas/patterns.hpp"

namespace kipas {

namespace {

[[noreturn]] void fail(const std::string& clause) { throw DescriptorError(clause); }

std::vector<int> part_index(const FamilyDescriptor& d, bool allow_empty_parts) {
  std::vector<int> owner(static_cast<std::size_t>(d.n), -1);
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    if (d.parts[p].empty() && !allow_empty_parts) fail("part " + std::to_string(p + 1) + " is empty");
    for (int v : d.parts[p]) {
      if (v < 0 || v >= d.n) fail("part vertex " + std::to_string(v) + " out of range");
      if (owner[static_cast<std::size_t>(v)] != -1) fail("parts are not disjoint at vertex " + std::to_string(v));
      owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < d.n; ++v)
    if (owner[static_cast<std::size_t>(v)] == -1) fail("vertex " + std::to_string(v) + " lies in no part");
  return owner;
}

void check_special(const FamilyDescriptor& d, std::size_t count) {
  if (d.special.size() != count) fail("expected " + std::to_string(count) + " special vertices");
  for (std::size_t i = 0; i < count; ++i) {
    if (d.special[i] < 0 || d.special[i] >= d.n) fail("special vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (d.special[i] == d.special[j]) fail("special vertices must be distinct");
  }
}

int required_k(Family f) {
  switch (f) {
    case Family::T:
    case Family::G1:
      return 3;
    case Family::G2:
    case Family::G3:
    case Family::Shape3:
    case Family::Shape4:
    case Family::Shape5:
      return 4;
    default:
      return 0;
  }
}

// Family colors (before color_map) on a flat pair table.
class Table {
 public:
  explicit Table(int n) : n_(n), c_(pair_count(n), 1) {}
  void set(int u, int v, Color c) { c_[idx(u, v)] = c; }
  Color get(int u, int v) const { return c_[idx(u, v)]; }
  int order() const { return n_; }

 private:
  std::size_t idx(int u, int v) const {
    if (u > v) std::swap(u, v);
    return pair_rank(u, v);
  }
  int n_;
  std::vector<Color> c_;
};

void apply_choices(const FamilyDescriptor& d, Table& t, const auto& allowed) {
  std::vector<char> seen(pair_count(d.n), 0);
  for (const PairColor& pc : d.choices) {
    if (pc.u < 0 || pc.v < 0 || pc.u >= d.n || pc.v >= d.n || pc.u == pc.v) fail("choice pair out of range");
    const int u = std::min(pc.u, pc.v), v = std::max(pc.u, pc.v);
    auto& s = seen[pair_rank(u, v)];
    if (s) fail("choice pair (" + std::to_string(u) + "," + std::to_string(v) + ") listed twice");
    s = 1;
    if (!allowed(u, v, pc.color))
      fail("choice color " + std::to_string(pc.color) + " not allowed on (" + std::to_string(u) + "," +
           std::to_string(v) + ")");
    t.set(u, v, pc.color);
  }
}

Table build_table(const FamilyDescriptor& d, int k) {
  Table t(d.n);
  switch (d.family) {
    case Family::Bk:
    case Family::Dominant: {
      if (k < 2) fail("needs at least 2 colors");
      if (static_cast<int>(d.parts.size()) != k - 1) fail("needs exactly k-1 parts");
      const auto owner = part_index(d, d.family == Family::Dominant);
      if (d.family == Family::Bk)
        for (const auto& p : d.parts)
          if (p.size() < 2) fail("every part needs at least 2 vertices");
      apply_choices(d, t, [&](int u, int v, Color c) {
        const int p = owner[static_cast<std::size_t>(u)];
        return p == owner[static_cast<std::size_t>(v)] && (c == 1 || c == p + 2);
      });
      break;
    }
    case Family::T:
    case Family::G1: {
      if (d.parts.size() != 3) fail("needs exactly 3 parts");
      const auto owner = part_index(d, true);
      const auto empties = std::count_if(d.parts.begin(), d.parts.end(), [](const auto& p) { return p.empty(); });
      if (d.family == Family::T && empties > 0) fail("all three parts must be nonempty");
      if (d.family == Family::G1 && empties > 1) fail("at most one part may be empty");
      static constexpr Color cross[3][3] = {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}};
      static constexpr Color inside[3][2] = {{1, 3}, {1, 2}, {2, 3}};
      for (int v = 1; v < d.n; ++v)
        for (int u = 0; u < v; ++u) {
          const int pu = owner[static_cast<std::size_t>(u)], pv = owner[static_cast<std::size_t>(v)];
          t.set(u, v, pu == pv ? inside[pu][0] : cross[pu][pv]);
        }
      apply_choices(d, t, [&](int u, int v, Color c) {
        const int p = owner[static_cast<std::size_t>(u)];
        return p == owner[static_cast<std::size_t>(v)] && (c == inside[p][0] || c == inside[p][1]);
      });
      break;
    }
    case Family::G2: {
      check_special(d, 2);
      if (!d.parts.empty() || !d.choices.empty()) fail("takes no parts or choices");
      const int x = d.special[0], y = d.special[1];
      for (int z = 0; z < d.n; ++z) {
        if (z != x && z != y) {
          t.set(x, z, 3);
          t.set(y, z, 4);
        }
      }
      t.set(x, y, 2);
      break;
    }
    case Family::G3: {
      check_special(d, 3);
      if (!d.parts.empty() || !d.choices.empty()) fail("takes no parts or choices");
      t.set(d.special[0], d.special[1], 2);
      t.set(d.special[1], d.special[2], 3);
      t.set(d.special[0], d.special[2], 4);
      break;
    }
    case Family::Shape2: {
      check_special(d, 1);
      if (k < 2) fail("needs at least 2 colors");
      const int a = d.special[0];
      apply_choices(d, t, [&](int u, int v, Color c) { return (u == a || v == a) && c >= 1 && c <= k; });
      break;
    }
    case Family::Shape3: {
      check_special(d, 3);
      const int a = d.special[0], b = d.special[1], c = d.special[2];
      t.set(a, b, 2);
      t.set(a, c, 3);
      t.set(b, c, 4);
      apply_choices(d, t, [&](int u, int v, Color col) {
        const int other = u == a ? v : (v == a ? u : -1);
        return other >= 0 && other != b && other != c && (col == 1 || col == 4);
      });
      break;
    }
    case Family::Shape4: {
      check_special(d, 4);
      const int a = d.special[0], b = d.special[1], c = d.special[2], dd = d.special[3];
      t.set(a, b, 2);
      t.set(a, c, 3);
      t.set(b, dd, 3);
      t.set(a, dd, 4);
      t.set(b, c, 4);
      apply_choices(d, t, [&](int u, int v, Color col) {
        return std::min(u, v) == std::min(c, dd) && std::max(u, v) == std::max(c, dd) && (col == 1 || col == 2);
      });
      break;
    }
    case Family::Shape5: {
      if (d.n != 5) fail("the sporadic shape lives on exactly 5 vertices");
      check_special(d, 5);
      if (!d.choices.empty()) fail("takes no choices");
      const auto& s = d.special;
      const int a = s[0], b = s[1], c = s[2], dd = s[3], e = s[4];
      t.set(a, dd, 1);
      t.set(a, e, 1);
      t.set(b, c, 1);
      t.set(b, dd, 2);
      t.set(b, e, 2);
      t.set(a, c, 2);
      t.set(c, dd, 3);
      t.set(c, e, 3);
      t.set(a, b, 3);
      t.set(dd, e, 4);
      break;
    }
  }
  return t;
}

PatternSpec kipas_target(int n) { return PatternSpec::kipas(n); }

void verify_free(const EdgeColoring& g, const PatternSpec& p, const char* what) {
  if (auto hit = has_mono_pattern_any(g, p))
    throw std::logic_error(std::string(what) + " contains a monochromatic " + to_string(p) + " in color " +
                           std::to_string(*hit->color));
}

void set_exact_if_surjective(EdgeColoring& g) {
  if (static_cast<int>(colors_used(g).size()) == g.num_colors()) g.set_exact(true);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Bk: return "bk";
    case Family::T: return "t";
    case Family::G1: return "g1";
    case Family::G2: return "g2";
    case Family::G3: return "g3";
    case Family::Dominant: return "dominant";
    case Family::Shape2: return "shape-ii";
    case Family::Shape3: return "shape-iii";
    case Family::Shape4: return "shape-iv";
    case Family::Shape5: return "shape-v";
  }
  return "?";
}

EdgeColoring build_family(const FamilyDescriptor& d) {
  if (d.n < 1 || d.n > kMaxVertices) fail("vertex count must be in 1..32");
  int k = d.k;
  if (const int need = required_k(d.family); need != 0) {
    if (k != 0 && k != need) fail(to_string(d.family) + " uses exactly " + std::to_string(need) + " colors");
    k = need;
  }
  if (k < 1 || k > kMaxColors) fail("color count out of range");
  const Table t = build_table(d, k);

  int out_k = k;
  if (!d.color_map.empty()) {
    if (static_cast<int>(d.color_map.size()) != k + 1) fail("color map needs one entry per family color");
    std::vector<Color> seen;
    for (int f = 1; f <= k; ++f) {
      const Color c = d.color_map[static_cast<std::size_t>(f)];
      if (c < 1 || c > kMaxColors) fail("color map entry out of range");
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) fail("color map is not injective");
      seen.push_back(c);
      out_k = std::max(out_k, c);
    }
  }
  EdgeColoring g(d.n, out_k);
  for (int v = 1; v < d.n; ++v)
    for (int u = 0; u < v; ++u) {
      const Color c = t.get(u, v);
      g.set(u, v, d.color_map.empty() ? c : d.color_map[static_cast<std::size_t>(c)]);
    }
  set_exact_if_surjective(g);
  return g;
}

EdgeColoring witness_kipas_linear(int n, int m, bool verify) {
  if (m < 2 || 2 * m > n) throw DomainError("witness_kipas_linear needs 2 <= m <= n/2");
  const int extra = (m + 1) / 2 - 1;
  const int total = n + extra;
  if (total > kMaxVertices) throw DomainError("witness_kipas_linear exceeds 32 vertices");
  EdgeColoring g(total, 2, 2);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.set(u, v, 1);
  set_exact_if_surjective(g);
  if (verify) {
    if (has_mono_pattern(g, 1, PatternSpec::kipas(n))) throw std::logic_error("red kipas in kipas-linear witness");
    if (has_mono_pattern(g, 2, PatternSpec::linear_forest(m, 2)))
      throw std::logic_error("blue linear forest in kipas-linear witness");
  }
  return g;
}

FamilyDescriptor witness_bk_path_descriptor(int k, int n) {
  if (k < 3) throw DomainError("witness_bk_path needs k >= 3");
  if (n <= 4 * (k - 2) + 1) throw DomainError("witness_bk_path needs n > 4(k-2)+1");
  const int total = (3 * n - 3 + 1) / 2 - 1;
  if (total > kMaxVertices) throw DomainError("witness_bk_path exceeds 32 vertices");
  FamilyDescriptor d;
  d.family = Family::Bk;
  d.n = total;
  d.k = k;
  int next = 0;
  for (int i = 0; i < k - 2; ++i) {
    d.parts.push_back({next, next + 1});
    d.choices.push_back({next, next + 1, i + 2});
    next += 2;
  }
  // The last part holds the color-k cliques H1 and H2 back to back.
  std::vector<int> last;
  for (int v = next; v < total; ++v) last.push_back(v);
  const int h2 = n - 1;
  const int h1 = static_cast<int>(last.size()) - h2;
  if (h1 < 0) throw std::logic_error("witness_bk_path part arithmetic");
  auto clique = [&](int from, int size) {
    for (int j = from + 1; j < from + size; ++j)
      for (int i = from; i < j; ++i) d.choices.push_back({i, j, k});
  };
  clique(next, h1);
  clique(next + h1, h2);
  d.parts.push_back(std::move(last));
  return d;
}

EdgeColoring witness_bk_path(int k, int n, bool verify) {
  EdgeColoring g = build_family(witness_bk_path_descriptor(k, n));
  if (verify) verify_free(g, PatternSpec::path(n), "bk path witness");
  return g;
}

FamilyDescriptor witness_t_path_descriptor(int n) {
  if (n < 3) throw DomainError("witness_t_path needs n >= 3");
  std::vector<int> sizes = n % 2 == 0 ? std::vector<int>{n / 2, n / 2 - 1, n / 2 - 1}
                                      : std::vector<int>{(n - 1) / 2, (n - 1) / 2, (n - 1) / 2};
  FamilyDescriptor d;
  d.family = Family::T;
  d.k = 3;
  int next = 0;
  for (int p = 0; p < 3; ++p) {
    std::vector<int> part;
    for (int i = 0; i < sizes[static_cast<std::size_t>(p)]; ++i) part.push_back(next++);
    // Part p+1 is internally color p+1.
    for (std::size_t j = 1; j < part.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) d.choices.push_back({part[i], part[j], p + 1});
    d.parts.push_back(std::move(part));
  }
  d.n = next;
  if (d.n > kMaxVertices) throw DomainError("witness_t_path exceeds 32 vertices");
  return d;
}

EdgeColoring witness_t_path(int n, bool verify) {
  EdgeColoring g = build_family(witness_t_path_descriptor(n));
  if (verify) verify_free(g, PatternSpec::path(n), "t path witness");
  return g;
}

FamilyDescriptor witness_b3_kipas_descriptor(int n) {
  if (n < 5) throw DomainError("witness_b3_kipas needs n >= 5");
  const std::vector<int> b_sizes = n % 2 == 1 ? std::vector<int>{(n - 1) / 2, (n - 1) / 2, (n - 1) / 2}
                                              : std::vector<int>{n / 2, n / 2 - 1, n / 2 - 1};
  const int total = n + b_sizes[0] + b_sizes[1] + b_sizes[2];
  if (total > kMaxVertices) throw DomainError("witness_b3_kipas exceeds 32 vertices");
  // B_3 parts: the B side (inside colors {1,2}) and A (inside colors {1,3}).
  FamilyDescriptor d;
  d.family = Family::Bk;
  d.n = total;
  d.k = 3;
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) a.push_back(v);
  for (int v = n; v < total; ++v) b.push_back(v);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) d.choices.push_back({i, j, 3});
  std::vector<int> block(static_cast<std::size_t>(total), -1);
  int next = n;
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < b_sizes[static_cast<std::size_t>(p)]; ++i) block[static_cast<std::size_t>(next++)] = p;
  for (int j = n + 1; j < total; ++j)
    for (int i = n; i < j; ++i)
      if (block[static_cast<std::size_t>(i)] != block[static_cast<std::size_t>(j)]) d.choices.push_back({i, j, 2});
  d.parts = {std::move(b), std::move(a)};
  return d;
}

EdgeColoring witness_b3_kipas(int n, bool verify) {
  EdgeColoring g = build_family(witness_b3_kipas_descriptor(n));
  if (verify) verify_free(g, kipas_target(n), "b3 kipas witness");
  return g;
}

EdgeColoring witness_small_kipas(int n, bool verify) {
  if (n != 2 && n != 3) throw DomainError("witness_small_kipas needs n in {2, 3}");
  const int side = n;
  EdgeColoring g(2 * side, 3, 1);
  for (int j = 1; j < side; ++j)
    for (int i = 0; i < j; ++i) {
      g.set(i, j, 2);
      g.set(side + i, side + j, 3);
    }
  set_exact_if_surjective(g);
  if (verify) verify_free(g, kipas_target(n), "small kipas witness");
  return g;
}

}  // namespace kipas
