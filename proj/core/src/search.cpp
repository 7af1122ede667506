#include "kipas/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "kipas/constructions.hpp"
#include "kipas/errors.hpp"
#include "kipas/graph.hpp"

namespace kipas {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000ULL;

constexpr Color kTCross[3][3] = {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}};
constexpr Color kTInside[3][2] = {{1, 3}, {1, 2}, {2, 3}};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Budget {
 public:
  Budget(std::uint64_t max_nodes, double max_seconds)
      : max_(max_nodes ? max_nodes : kDefaultNodeBudget),
        timed_(max_seconds > 0),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(
                                     max_seconds > 0 ? max_seconds : 0))) {}

  // Adds `count` nodes; false once the node or time budget is spent.
  bool charge(std::uint64_t count) {
    const std::uint64_t total = nodes_.fetch_add(count, std::memory_order_relaxed) + count;
    if (total > max_ || (timed_ && Clock::now() > deadline_)) out_.store(true, std::memory_order_relaxed);
    return !out_.load(std::memory_order_relaxed);
  }
  void leaf() { leaves_.fetch_add(1, std::memory_order_relaxed); }
  bool exhausted() const { return out_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }
  std::uint64_t leaves() const { return leaves_.load(); }

 private:
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> leaves_{0};
  std::atomic<bool> out_{false};
  std::uint64_t max_;
  bool timed_;
  Clock::time_point deadline_;
};

// A coloring search space: each edge (in lexicographic order) picks a color
// from its domain; the search looks for a complete coloring with no avoided
// monochromatic pattern, no avoided rainbow pattern, and (optionally) every
// color used.
struct Problem {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<Color>> domain;
  std::vector<std::vector<PatternSpec>> avoid;  // by color, index 0 unused
  std::vector<PatternSpec> rainbow_avoid;
  bool surjective = false;
  bool sorted_first_row = false;  // colors of (0,1), (0,2), ... non-decreasing
  bool canonical_colors = false;  // colors appear first in increasing order
};

Problem make_problem(int n, int k) {
  Problem p;
  p.n = n;
  p.k = k;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) p.edges.emplace_back(u, v);
  std::vector<Color> all(static_cast<std::size_t>(k));
  for (int c = 1; c <= k; ++c) all[static_cast<std::size_t>(c - 1)] = c;
  p.domain.assign(p.edges.size(), all);
  p.avoid.resize(static_cast<std::size_t>(k) + 1);
  return p;
}

void avoid_in_every_color(Problem& p, const PatternSpec& target) {
  for (int c = 1; c <= p.k; ++c) p.avoid[static_cast<std::size_t>(c)].push_back(target);
}

// Parts as consecutive vertex ranges.
std::vector<int> part_labels(const std::vector<int>& sizes) {
  std::vector<int> label;
  for (std::size_t i = 0; i < sizes.size(); ++i) label.insert(label.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  return label;
}

Problem bk_problem(int k, const std::vector<int>& sizes) {
  const auto label = part_labels(sizes);
  Problem p = make_problem(static_cast<int>(label.size()), k);
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    const int pu = label[static_cast<std::size_t>(p.edges[e].first)];
    const int pv = label[static_cast<std::size_t>(p.edges[e].second)];
    p.domain[e] = pu == pv ? std::vector<Color>{1, pu + 2} : std::vector<Color>{1};
  }
  p.surjective = true;
  return p;
}

Problem t_problem(const std::vector<int>& sizes) {
  const auto label = part_labels(sizes);
  Problem p = make_problem(static_cast<int>(label.size()), 3);
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    const int pu = label[static_cast<std::size_t>(p.edges[e].first)];
    const int pv = label[static_cast<std::size_t>(p.edges[e].second)];
    p.domain[e] = pu == pv ? std::vector<Color>{kTInside[pu][0], kTInside[pu][1]} : std::vector<Color>{kTCross[pu][pv]};
  }
  return p;
}

// Non-decreasing size vectors with `parts` entries >= `min_size` summing to n.
std::vector<std::vector<int>> size_multisets(int n, int parts, int min_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int slots, int lo) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int s = lo; s * slots <= remaining; ++s) {
      cur.push_back(s);
      self(self, remaining - s, slots - 1, s);
      cur.pop_back();
    }
  };
  rec(rec, n, parts, min_size);
  return out;
}

class Dfs {
 public:
  enum class Outcome { Found, NotFound, Aborted };

  Dfs(const Problem& p, Budget& budget, const std::atomic<std::size_t>* best = nullptr, std::size_t task = 0)
      : p_(p), budget_(budget), best_(best), task_(task), col_(p.edges.size(), 0), used_(static_cast<std::size_t>(p.k) + 1, 0) {
    for (int c = 0; c <= p.k; ++c) graphs_.emplace_back(p.n);
  }

  ~Dfs() { flush(); }

  bool apply(std::size_t e, Color c) {
    const auto [u, v] = p_.edges[e];
    Graph& g = graphs_[static_cast<std::size_t>(c)];
    g.add_edge(u, v);
    col_[e] = c;
    if (used_[static_cast<std::size_t>(c)]++ == 0) ++distinct_;
    bool ok = true;
    for (const PatternSpec& pat : p_.avoid[static_cast<std::size_t>(c)])
      if (contains(g, pat)) {
        ok = false;
        break;
      }
    if (ok && p_.surjective && p_.k - distinct_ > static_cast<int>(p_.edges.size() - e - 1)) ok = false;
    if (!ok) undo(e);
    return ok;
  }

  void undo(std::size_t e) {
    const Color c = col_[e];
    graphs_[static_cast<std::size_t>(c)].remove_edge(p_.edges[e].first, p_.edges[e].second);
    if (--used_[static_cast<std::size_t>(c)] == 0) --distinct_;
    col_[e] = 0;
  }

  Outcome run(std::size_t e) {
    if (e == p_.edges.size()) {
      budget_.leaf();
      return leaf_ok() ? Outcome::Found : Outcome::NotFound;
    }
    for (Color c : p_.domain[e]) {
      if (!admissible(e, c)) continue;
      if (!tick()) return Outcome::Aborted;
      if (!apply(e, c)) continue;
      const Outcome r = run(e + 1);
      if (r == Outcome::Found) return r;
      undo(e);
      if (r == Outcome::Aborted) return r;
    }
    return Outcome::NotFound;
  }

  // Records every surviving assignment of the first `depth` edges.
  void collect(std::size_t e, std::size_t depth, std::vector<std::vector<Color>>& out) {
    if (e == depth) {
      out.emplace_back(col_.begin(), col_.begin() + static_cast<std::ptrdiff_t>(depth));
      return;
    }
    for (Color c : p_.domain[e]) {
      if (!admissible(e, c)) continue;
      tick();
      if (!apply(e, c)) continue;
      collect(e + 1, depth, out);
      undo(e);
    }
  }

  void replay(const std::vector<Color>& prefix) {
    for (std::size_t e = 0; e < prefix.size(); ++e)
      if (!apply(e, prefix[e])) throw std::logic_error("search prefix no longer valid");
  }

  EdgeColoring coloring() const {
    EdgeColoring g(p_.n, p_.k);
    for (std::size_t e = 0; e < p_.edges.size(); ++e) g.set(p_.edges[e].first, p_.edges[e].second, col_[e]);
    return g;
  }

  void flush() {
    if (pending_) {
      budget_.charge(pending_);
      pending_ = 0;
    }
  }

 private:
  bool admissible(std::size_t e, Color c) const {
    if (p_.sorted_first_row && e >= 1 && e + 1 < static_cast<std::size_t>(p_.n) && c < col_[e - 1]) return false;
    if (p_.canonical_colors && c > distinct_ + 1) return false;
    return true;
  }

  bool tick() {
    if (++pending_ >= 1024) {
      const bool ok = budget_.charge(pending_);
      pending_ = 0;
      if (!ok) return false;
      if (best_ && best_->load(std::memory_order_relaxed) < task_) return false;
    }
    return true;
  }

  bool leaf_ok() const {
    for (int c = 1; c <= p_.k; ++c)
      for (const PatternSpec& pat : p_.avoid[static_cast<std::size_t>(c)])
        if (pat.edge_count() == 0 && pat.vertex_count() <= p_.n) return false;
    if (p_.surjective && distinct_ < p_.k) return false;
    if (p_.rainbow_avoid.empty()) return true;
    const EdgeColoring g = coloring();
    for (const PatternSpec& pat : p_.rainbow_avoid)
      if (has_rainbow(g, pat)) return false;
    return true;
  }

  const Problem& p_;
  Budget& budget_;
  const std::atomic<std::size_t>* best_;
  std::size_t task_;
  std::vector<Color> col_;
  std::vector<Graph> graphs_;
  std::vector<int> used_;
  int distinct_ = 0;
  std::uint64_t pending_ = 0;
};

struct EngineResult {
  std::optional<EdgeColoring> found;
  bool exhausted = false;
};

// First avoiding coloring in enumeration order. With several threads the
// space is cut into prefix tasks; the earliest task with a hit wins, so the
// answer does not depend on the thread count.
EngineResult find_avoider(const Problem& p, Budget& budget, int threads) {
  EngineResult result;
  if (threads <= 1) {
    Dfs dfs(p, budget);
    const auto outcome = dfs.run(0);
    if (outcome == Dfs::Outcome::Found) result.found = dfs.coloring();
    dfs.flush();
    result.exhausted = outcome == Dfs::Outcome::Aborted;
    return result;
  }

  std::size_t depth = 0;
  double leaves = 1;
  const double wanted = 64.0 * threads;
  while (depth < p.edges.size() && leaves < wanted) leaves *= static_cast<double>(p.domain[depth++].size());
  std::vector<std::vector<Color>> prefixes;
  {
    Dfs dfs(p, budget);
    dfs.collect(0, depth, prefixes);
  }
  const std::size_t tasks = prefixes.size();
  std::vector<std::optional<EdgeColoring>> hits(tasks);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{tasks};
  std::atomic<bool> aborted{false};

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks || i > best.load()) return;
      Dfs dfs(p, budget, &best, i);
      dfs.replay(prefixes[i]);
      const auto outcome = dfs.run(depth);
      if (outcome == Dfs::Outcome::Found) {
        hits[i] = dfs.coloring();
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      } else if (outcome == Dfs::Outcome::Aborted && budget.exhausted()) {
        aborted = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (best.load() < tasks) result.found = hits[best.load()];
  result.exhausted = aborted.load();
  return result;
}

std::string partial(std::int64_t lo) { return "value lies in [" + std::to_string(lo) + ", inf)"; }

void check_threads(const SearchOptions& o) {
  if (o.threads < 1) throw DomainError("thread count must be at least 1");
}

// Runs the B_k(N) or T(N) family search for one N. Returns the first avoider.
std::optional<EdgeColoring> family_avoider(bool bk, int k, int N, const PatternSpec& target,
                                           const std::vector<PatternSpec>& rainbow, Budget& budget, int threads,
                                           const std::string& what) {
  const auto sizes_list = bk ? size_multisets(N, k - 1, 2) : size_multisets(N, 3, 1);
  for (const auto& sizes : sizes_list) {
    Problem p = bk ? bk_problem(k, sizes) : t_problem(sizes);
    avoid_in_every_color(p, target);
    p.rainbow_avoid = rainbow;
    auto r = find_avoider(p, budget, threads);
    if (r.exhausted) throw CapabilityError(what + ": search budget exhausted at N = " + std::to_string(N) + "; " + partial(N));
    if (r.found) return r.found;
  }
  return std::nullopt;
}

SearchReport family_search(bool bk, int k, const PatternSpec& target, int max_n, const SearchOptions& options) {
  check_threads(options);
  const auto start = Clock::now();
  Budget budget(options.max_nodes, options.max_seconds);
  SearchReport rep;
  rep.quantity = bk ? "bk(" + std::to_string(k) + ", " + to_string(target) + ")" : "t(" + to_string(target) + ")";
  rep.threads = options.threads;
  const int first = bk ? 2 * (k - 1) : 3;
  std::optional<EdgeColoring> witness;
  bool settled = false;
  for (int N = first; N <= max_n && !settled; ++N) {
    auto hit = family_avoider(bk, k, N, target, {}, budget, options.threads, rep.quantity);
    if (!hit) {
      rep.value = ValueOrInterval::exact_value(N);
      rep.extremal_witness = witness;
      settled = true;
    }
    witness = std::move(hit);
  }
  if (!settled) {
    rep.value = ValueOrInterval::interval(std::max(first, max_n + 1), kUnbounded, "not reached within max_n");
    rep.extremal_witness = witness;
  }
  rep.nodes_explored = budget.nodes();
  rep.wall_seconds = seconds_since(start);
  return rep;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_query(const UniversalQuery& q) {
  if (q.n < 1 || q.n > kUniversalMaxN) throw DomainError("universal_check needs 1 <= N <= 11");
  if (q.colors < 1 || q.colors > kMaxColors) throw DomainError("color count out of range");
  for (const auto* list : {&q.forbidden, &q.required})
    for (const auto& cp : *list)
      if (cp.color < 1 || cp.color > q.colors) throw DomainError("pattern color out of range");
}

// True when a complete coloring is a counterexample to the query.
bool refutes(const UniversalQuery& q, const EdgeColoring& g) {
  for (const auto& f : q.forbidden)
    if (contains(g.color_graph(f.color), f.pattern)) return false;
  for (const auto& r : q.forbidden_rainbow)
    if (has_rainbow(g, r)) return false;
  for (const auto& r : q.required)
    if (contains(g.color_graph(r.color), r.pattern)) return false;
  return true;
}

// Candidate colorings for the exceptional shapes of the structure classification.
std::vector<EdgeColoring> exceptional_shapes(RainbowContext ctx, int k, int N) {
  std::vector<EdgeColoring> out;
  auto add = [&](const FamilyDescriptor& d) {
    EdgeColoring g = build_family(d);
    if (static_cast<int>(colors_used(g).size()) == k) out.push_back(std::move(g));
  };
  switch (ctx) {
    case RainbowContext::K13:
      break;  // T(N) is searched separately
    case RainbowContext::P4plus:
      if (k == 4 && N >= 4) {
        FamilyDescriptor g2;
        g2.family = Family::G2;
        g2.n = N;
        g2.special = {0, 1};
        add(g2);
        FamilyDescriptor g3;
        g3.family = Family::G3;
        g3.n = N;
        g3.special = {0, 1, 2};
        add(g3);
      }
      break;
    case RainbowContext::P5: {
      // (ii): K_N minus vertex 0 in color 1; the star at 0 as a sorted color multiset.
      std::vector<Color> star;
      auto rec = [&](auto&& self, Color lo) -> void {
        if (static_cast<int>(star.size()) == N - 1) {
          FamilyDescriptor d;
          d.family = Family::Shape2;
          d.n = N;
          d.k = k;
          d.special = {0};
          for (int v = 1; v < N; ++v)
            if (star[static_cast<std::size_t>(v - 1)] != 1) d.choices.push_back({0, v, star[static_cast<std::size_t>(v - 1)]});
          add(d);
          return;
        }
        for (Color c = lo; c <= k; ++c) {
          star.push_back(c);
          self(self, c);
          star.pop_back();
        }
      };
      rec(rec, 1);
      if (k != 4) break;
      // (iii): a, b, c = 0, 1, 2; the first t of the other a-edges in color 4.
      for (int t = 0; t <= N - 3 && N >= 4; ++t) {
        FamilyDescriptor d;
        d.family = Family::Shape3;
        d.n = N;
        d.special = {0, 1, 2};
        for (int v = 3; v < 3 + t; ++v) d.choices.push_back({0, v, 4});
        add(d);
      }
      // (iv): a, b, c, d = 0, 1, 2, 3 with cd in color 1 or 2.
      if (N >= 5)
        for (Color cd : {1, 2}) {
          FamilyDescriptor d;
          d.family = Family::Shape4;
          d.n = N;
          d.special = {0, 1, 2, 3};
          if (cd == 2) d.choices.push_back({2, 3, 2});
          add(d);
        }
      if (N == 5) {
        FamilyDescriptor d;
        d.family = Family::Shape5;
        d.n = 5;
        d.special = {0, 1, 2, 3, 4};
        add(d);
      }
      break;
    }
  }
  return out;
}

}  // namespace

RainbowContext context_for_rainbow(const PatternSpec& rainbow) {
  if (rainbow == PatternSpec::path(5)) return RainbowContext::P5;
  if (rainbow == PatternSpec::star(3)) return RainbowContext::K13;
  if (rainbow == PatternSpec::p4plus()) return RainbowContext::P4plus;
  throw CapabilityError("structure mode needs rainbow path:5, star:3 or p4plus, not " + to_string(rainbow));
}

SearchReport brute_force_ramsey(const PatternSpec& red, const PatternSpec& blue, int max_n, const SearchOptions& options) {
  check_threads(options);
  if (max_n < 1 || max_n > kRamseyMaxN) throw DomainError("brute_force_ramsey needs 1 <= max_n <= 9");
  if (red.vertex_count() > max_n || blue.vertex_count() > max_n)
    throw DomainError("pattern order exceeds max_n = " + std::to_string(max_n));
  const auto start = Clock::now();
  Budget budget(options.max_nodes, options.max_seconds);
  SearchReport rep;
  rep.quantity = "ramsey(" + to_string(red) + ", " + to_string(blue) + ")";
  rep.threads = options.threads;
  std::optional<EdgeColoring> witness;
  bool settled = false;
  for (int N = 1; N <= max_n && !settled; ++N) {
    Problem p = make_problem(N, 2);
    p.avoid[1].push_back(red);
    p.avoid[2].push_back(blue);
    p.sorted_first_row = true;
    p.canonical_colors = red == blue;
    auto r = find_avoider(p, budget, options.threads);
    if (r.exhausted) throw CapabilityError(rep.quantity + ": search budget exhausted at N = " + std::to_string(N) + "; " + partial(N));
    if (!r.found) {
      rep.value = ValueOrInterval::exact_value(N);
      rep.extremal_witness = witness;
      settled = true;
    }
    witness = std::move(r.found);
  }
  if (!settled) {
    rep.value = ValueOrInterval::interval(max_n + 1, kUnbounded, "not reached within max_n");
    rep.extremal_witness = witness;
  }
  rep.nodes_explored = budget.nodes();
  rep.wall_seconds = seconds_since(start);
  return rep;
}

SearchReport compute_bk(int k, const PatternSpec& target, int max_n, const SearchOptions& options) {
  if (k < 3) throw DomainError("compute_bk needs k >= 3");
  if (max_n > kBkMaxN)
    throw CapabilityError("compute_bk enumerates at most N = 14; " + partial(2 * (k - 1)));
  return family_search(true, k, target, max_n, options);
}

SearchReport compute_t(const PatternSpec& target, int max_n, const SearchOptions& options) {
  if (max_n > kTMaxN) throw CapabilityError("compute_t enumerates at most N = 12; " + partial(3));
  return family_search(false, 3, target, max_n, options);
}

CheckResult universal_check(const UniversalQuery& q, const SearchOptions& options) {
  check_threads(options);
  check_query(q);
  const auto start = Clock::now();
  Budget budget(options.max_nodes, options.max_seconds);
  Problem p = make_problem(q.n, q.colors);
  for (const auto* list : {&q.forbidden, &q.required})
    for (const auto& cp : *list) p.avoid[static_cast<std::size_t>(cp.color)].push_back(cp.pattern);
  p.rainbow_avoid = q.forbidden_rainbow;
  p.sorted_first_row = true;
  auto r = find_avoider(p, budget, options.threads);
  if (r.exhausted) throw CapabilityError("universal_check: exhaustive enumeration exceeded the search budget");
  CheckResult out;
  out.holds = !r.found;
  out.counterexample = std::move(r.found);
  out.nodes_explored = budget.nodes();
  out.colorings_checked = budget.leaves();
  out.wall_seconds = seconds_since(start);
  return out;
}

CheckResult universal_check_random(const UniversalQuery& q, std::uint64_t samples, std::uint64_t seed,
                                   const SearchOptions& options) {
  check_threads(options);
  if (q.n < 1 || q.n > kMaxVertices) throw DomainError("universal_check_random needs 1 <= N <= 32");
  if (q.colors < 1 || q.colors > kMaxColors) throw DomainError("color count out of range");
  const auto start = Clock::now();
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{samples};
  std::atomic<std::uint64_t> done{0};
  std::mutex mu;
  std::optional<EdgeColoring> counterexample;
  const double deadline = options.max_seconds;

  auto draw = [&](std::uint64_t i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    std::vector<double> weights(static_cast<std::size_t>(q.colors));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& w : weights) w = unit(rng);
    std::discrete_distribution<int> pick(weights.begin(), weights.end());
    EdgeColoring g(q.n, q.colors);
    for (int u = 0; u < q.n; ++u)
      for (int v = u + 1; v < q.n; ++v) g.set(u, v, pick(rng) + 1);
    return g;
  };
  auto work = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= samples || i > best.load()) return;
      if (deadline > 0 && seconds_since(start) > deadline) return;
      EdgeColoring g = draw(i);
      done.fetch_add(1);
      if (!refutes(q, g)) continue;
      std::lock_guard lock(mu);
      if (i < best.load()) {
        best = i;
        counterexample = std::move(g);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < options.threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  CheckResult out;
  out.randomized = true;
  out.holds = !counterexample;
  out.counterexample = std::move(counterexample);
  out.colorings_checked = done.load();
  out.nodes_explored = done.load();
  out.wall_seconds = seconds_since(start);
  return out;
}

CheckResult gr_desk_verify(int k, const PatternSpec& rainbow, const PatternSpec& target, int N, GrMode mode,
                           const SearchOptions& options) {
  check_threads(options);
  if (k < 1 || k > kMaxColors) throw DomainError("color count out of range");
  if (N < 1 || N > kMaxVertices) throw DomainError("N must be in 1..32");
  const auto start = Clock::now();
  Budget budget(options.max_nodes, options.max_seconds);
  CheckResult out;

  if (mode == GrMode::Full) {
    Problem p = make_problem(N, k);
    avoid_in_every_color(p, target);
    p.rainbow_avoid = {rainbow};
    p.surjective = true;
    p.sorted_first_row = true;
    p.canonical_colors = true;
    auto r = find_avoider(p, budget, options.threads);
    if (r.exhausted) throw CapabilityError("grverify: full enumeration exceeded the search budget");
    out.holds = !r.found;
    out.counterexample = std::move(r.found);
  } else {
    const RainbowContext ctx = context_for_rainbow(rainbow);
    if (ctx == RainbowContext::P5 && (k < 4 || N < 5))
      throw CapabilityError("structure mode for rainbow path:5 needs k >= 4 and N >= 5");
    if (ctx == RainbowContext::K13 && k < 3) throw CapabilityError("structure mode for rainbow star:3 needs k >= 3");
    if (ctx == RainbowContext::P4plus && k < 4) throw CapabilityError("structure mode for rainbow p4plus needs k >= 4");
    const std::string what = "grverify";
    std::optional<EdgeColoring> hit;
    if (N >= 2 * (k - 1)) hit = family_avoider(true, k, N, target, {rainbow}, budget, options.threads, what);
    if (!hit && ctx == RainbowContext::K13 && k == 3 && N >= 3)
      hit = family_avoider(false, 3, N, target, {rainbow}, budget, options.threads, what);
    if (!hit) {
      for (EdgeColoring& g : exceptional_shapes(ctx, k, N)) {
        budget.charge(1);
        budget.leaf();
        if (!has_rainbow(g, rainbow) && !has_mono_pattern_any(g, target)) {
          hit = std::move(g);
          break;
        }
      }
    }
    out.holds = !hit;
    out.counterexample = std::move(hit);
  }
  out.nodes_explored = budget.nodes();
  out.colorings_checked = budget.leaves();
  out.wall_seconds = seconds_since(start);
  return out;
}

void for_each_coloring(int n, int k, bool surjective, const std::function<bool(const EdgeColoring&)>& visit) {
  if (n < 1 || n > kMaxVertices || k < 1 || k > kMaxColors) throw DomainError("for_each_coloring: bad n or k");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  std::vector<Color> digits(edges.size(), 1);
  EdgeColoring g(n, k);
  for (;;) {
    for (std::size_t e = 0; e < edges.size(); ++e) g.set(edges[e].first, edges[e].second, digits[e]);
    if (!surjective || static_cast<int>(colors_used(g).size()) == k)
      if (!visit(g)) return;
    // Odometer with the last edge fastest, so visiting order is lexicographic.
    std::size_t i = edges.size();
    while (i > 0 && digits[i - 1] == k) digits[--i] = 1;
    if (i == 0) return;
    ++digits[i - 1];
  }
}

}  // namespace kipas
