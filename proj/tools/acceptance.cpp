#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "kipas/constructions.hpp"
#include "kipas/formulas.hpp"
#include "kipas/patterns.hpp"
#include "kipas/search.hpp"
#include "kipas/structure.hpp"
#include "naive.hpp"

namespace kipas::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Collects failure messages for one criterion.
class Report {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool passed() const { return failures_.empty(); }
  std::string text() const {
    std::ostringstream s;
    if (!failures_.empty()) {
      s << failures_.size() << " of " << checks_ << " checks failed: ";
      for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) s << (i ? "; " : "") << failures_[i];
      if (failures_.size() > 5) s << "; ...";
    } else {
      s << checks_ << " checks";
    }
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

bool mono_free(const EdgeColoring& g, const PatternSpec& p) { return !has_mono_pattern_any(g, p); }

PatternSpec P(int n) { return PatternSpec::path(n); }

void ramsey_paths(Report& r, const Options& o) {
  const std::pair<int, int> cases[] = {{3, 3}, {4, 3}, {4, 4}, {5, 4}};
  for (auto [n, m] : cases) {
    const auto t = Clock::now();
    const auto rep = brute_force_ramsey(P(n), P(m), 7, {o.threads});
    const double secs = since(t);
    const auto expected = r_path_path(n, m);
    const std::string tag = "r(P" + std::to_string(n) + ",P" + std::to_string(m) + ")";
    r.expect(rep.value == expected, tag + " = " + to_string(rep.value) + ", formula " + to_string(expected));
    r.expect(secs < 10, tag + " took " + fmt_seconds(secs));
    if (rep.value.exact()) {
      r.expect(rep.extremal_witness && rep.extremal_witness->order() == rep.value.lo - 1 &&
                   !has_mono_pattern(*rep.extremal_witness, 1, P(n)) && !has_mono_pattern(*rep.extremal_witness, 2, P(m)),
               tag + " extremal witness invalid");
    }
  }
}

void kipas_linear(Report& r, const Options& o) {
  const auto t = Clock::now();
  const auto lf = PatternSpec::linear_forest(2, 2);
  const auto rep = brute_force_ramsey(PatternSpec::kipas(4), lf, 6, {o.threads});
  const double secs = since(t);
  r.expect(rep.value == ValueOrInterval::exact_value(5), "search gave " + to_string(rep.value));
  r.expect(rep.value == r_kipas_linear_family(4, 2, 2), "formula disagrees with search");
  r.expect(secs < 10, "search took " + fmt_seconds(secs));
  const EdgeColoring w = witness_kipas_linear(4, 2);
  r.expect(w.order() == 4, "witness order " + std::to_string(w.order()));
  r.expect(!has_mono_pattern(w, 1, PatternSpec::kipas(4)), "witness has a red kipas:4");
  r.expect(!has_mono_pattern(w, 2, lf), "witness has a blue linear forest with 2 edges");
}

UniversalQuery kipas_query(int n, int a) {
  UniversalQuery q;
  q.n = n + a;
  q.forbidden = {{1, PatternSpec::kipas(n)}};
  if (a == 1) {
    q.required = {{2, PatternSpec::linear_forest_exact({2, 2})}, {2, P(3)}};
  } else {
    q.required = {{2, PatternSpec::linear_forest_exact({3, 3})}, {2, P(5)}, {2, PatternSpec::linear_forest_exact({4, 2})}};
  }
  return q;
}

void kipas_blue_forests(Report& r, const Options& o) {
  const auto t = Clock::now();
  const auto a1 = universal_check(kipas_query(5, 1), {o.threads});
  r.expect(a1.holds, "a=1 on K_6 has a counterexample");
  const auto a2 = universal_check(kipas_query(5, 2), {o.threads});
  r.expect(a2.holds, "a=2 on K_7 has a counterexample");
  const double secs = since(t);
  r.expect(secs < 60, "took " + fmt_seconds(secs));
  r.note("K_6 and K_7 searched in " + fmt_seconds(secs));
}

void t_family(Report& r, const Options& o) {
  const std::pair<int, int> cases[] = {{3, 6}, {4, 8}, {5, 9}};
  for (auto [n, max_n] : cases) {
    const auto t = Clock::now();
    const auto rep = compute_t(P(n), max_n, {o.threads});
    const double secs = since(t);
    const std::string tag = "t(P" + std::to_string(n) + ")";
    r.expect(rep.value == t_path(n), tag + " = " + to_string(rep.value) + ", formula " + to_string(t_path(n)));
    r.expect(secs < 60, tag + " took " + fmt_seconds(secs));
    if (rep.extremal_witness) {
      r.expect(mono_free(*rep.extremal_witness, P(n)), tag + " witness holds a monochromatic path");
      r.expect(is_member(*rep.extremal_witness, Family::T).has_value(), tag + " witness is not in T");
    }
  }
}

void bk_family(Report& r, const Options& o) {
  const std::pair<int, int> cases[] = {{4, 8}, {6, 10}};
  for (auto [n, max_n] : cases) {
    const auto t = Clock::now();
    const auto rep = compute_bk(3, P(n), max_n, {o.threads});
    const double secs = since(t);
    const std::string tag = "b_3(P" + std::to_string(n) + ")";
    r.expect(rep.value == bk_path(3, n), tag + " = " + to_string(rep.value) + ", formula " + to_string(bk_path(3, n)));
    r.expect(secs < 300, tag + " took " + fmt_seconds(secs));
    if (rep.extremal_witness) {
      r.expect(mono_free(*rep.extremal_witness, P(n)), tag + " witness holds a monochromatic path");
      r.expect(is_member(*rep.extremal_witness, Family::Bk, true).has_value(), tag + " witness is not in B_3");
    }
  }
}

void witness_suite(Report& r, const Options&) {
  const auto t = Clock::now();
  for (int n : {4, 5, 6}) {
    const auto g = witness_t_path(n);
    const std::string tag = "t-path-witness(" + std::to_string(n) + ")";
    r.expect(is_member(g, Family::T).has_value(), tag + " not in T");
    r.expect(mono_free(g, P(n)), tag + " holds a monochromatic path");
  }
  for (int n : {6, 7}) {
    const auto g = witness_bk_path(3, n);
    const std::string tag = "bk-path-witness(3," + std::to_string(n) + ")";
    r.expect(is_member(g, Family::Bk, true).has_value(), tag + " not in B_3");
    r.expect(mono_free(g, P(n)), tag + " holds a monochromatic path");
  }
  {
    const auto g = witness_b3_kipas(5);
    r.expect(is_member(g, Family::Bk, true).has_value(), "b3-kipas-witness(5) not in B_3");
    r.expect(mono_free(g, PatternSpec::kipas(5)), "b3-kipas-witness(5) holds a monochromatic kipas");
  }
  for (int n : {2, 3}) {
    const auto g = witness_small_kipas(n);
    const std::string tag = "small-kipas-witness(" + std::to_string(n) + ")";
    r.expect(is_member(g, Family::Bk, true).has_value(), tag + " not in B_3");
    r.expect(mono_free(g, PatternSpec::kipas(n)), tag + " holds a monochromatic kipas");
  }
  for (auto [n, m] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{8, 4}}) {
    const auto g = witness_kipas_linear(n, m);
    const std::string tag = "kipas-linear-witness(" + std::to_string(n) + "," + std::to_string(m) + ")";
    // Its family: red exactly the clique on the first n vertices, blue elsewhere.
    bool shape = g.order() == n + (m + 1) / 2 - 1;
    for (int v = 1; v < g.order(); ++v)
      for (int u = 0; u < v; ++u) shape = shape && (g.color(u, v) == 1) == (v < n);
    r.expect(shape, tag + " is not a red clique plus blue remainder");
    r.expect(!has_mono_pattern(g, 1, PatternSpec::kipas(n)), tag + " holds a red kipas");
    r.expect(!has_mono_pattern(g, 2, PatternSpec::linear_forest(m, 2)), tag + " holds a blue linear forest");
  }
  const double secs = since(t);
  r.expect(secs < 30, "took " + fmt_seconds(secs));
}

void gr_p5_path6(Report& r, const Options& o) {
  const auto t = Clock::now();
  const auto rainbow = P(5);
  const auto holds = gr_desk_verify(4, rainbow, P(6), 7, GrMode::Structure, {o.threads});
  r.expect(holds.holds, "N=7 has a counterexample");
  const auto fails = gr_desk_verify(4, rainbow, P(6), 6, GrMode::Structure, {o.threads});
  r.expect(!fails.holds && fails.counterexample.has_value(), "N=6 has no counterexample");
  if (fails.counterexample) {
    const auto& g = *fails.counterexample;
    r.expect(colors_used(g).size() == 4, "counterexample does not use 4 colors");
    r.expect(!has_rainbow(g, rainbow), "counterexample holds a rainbow path:5");
    r.expect(mono_free(g, P(6)), "counterexample holds a monochromatic path:6");
  }
  r.expect(gr_p5_path(4, 6) == ValueOrInterval::exact_value(7), "formula gr_4(P5:P6) is not 7");
  const double secs = since(t);
  r.expect(secs < 300, "took " + fmt_seconds(secs));
}

void k13_structure(Report& r, const Options&) {
  const auto t = Clock::now();
  const auto star = PatternSpec::star(3);
  long inputs = 0, g1 = 0, dominant = 0, bad = 0;
  for_each_coloring(5, 3, true, [&](const EdgeColoring& g) {
    if (has_rainbow(g, star)) return true;
    ++inputs;
    const auto c = classify_structure(g, RainbowContext::K13);
    const std::string label = c.label();
    if (label == "g1") ++g1;
    else if (label == "dominant") ++dominant;
    else ++bad;
    if (c.descriptor && !descriptor_matches(g, *c.descriptor)) ++bad;
    return true;
  });
  r.expect(inputs > 0, "no rainbow-star-free colorings enumerated");
  r.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(inputs) + " inputs unclassified or unsound");
  const double secs = since(t);
  r.expect(secs < 60, "took " + fmt_seconds(secs));
  r.note(std::to_string(inputs) + " inputs: " + std::to_string(dominant) + " dominant, " + std::to_string(g1) + " g1");
}

void formula_reductions(Report& r, const Options&) {
  for (int k = 4; k <= 8; ++k)
    for (int n = 2 * (k - 1); n <= 60; ++n)
      r.expect(gr_k13_path(k, n) == bk_path(k, n), "k=" + std::to_string(k) + " n=" + std::to_string(n));
  for (int n = 4; n <= 60; ++n) r.expect(gr_k13_path(3, n) == t_path(n), "k=3 n=" + std::to_string(n));
}

std::vector<PatternSpec> oracle_patterns() {
  std::vector<PatternSpec> ps;
  for (int n = 2; n <= 6; ++n) ps.push_back(P(n));
  for (int n = 2; n <= 4; ++n) ps.push_back(PatternSpec::star(n));
  for (int n = 2; n <= 4; ++n) ps.push_back(PatternSpec::kipas(n));
  ps.push_back(PatternSpec::complete(3));
  ps.push_back(PatternSpec::complete(4));
  ps.push_back(PatternSpec::linear_forest_exact({2, 2}));
  ps.push_back(PatternSpec::linear_forest_exact({3, 2}));
  ps.push_back(PatternSpec::linear_forest_exact({3, 3}));
  ps.push_back(PatternSpec::p4plus());
  for (int m = 1; m <= 4; ++m) {
    ps.push_back(PatternSpec::linear_forest(m, 2));
    ps.push_back(PatternSpec::linear_forest(m, 3));
  }
  return ps;
}

// Compares detectors with the naive oracles on one color class.
void compare(Report& r, const EdgeColoring& g, Color c, const std::vector<PatternSpec>& patterns, const std::string& tag) {
  const Graph h = g.color_graph(c);
  const auto lp = longest_mono_path(g, c);
  r.expect(lp.order == naive::longest_path_order(h), tag + " longest path");
  r.expect(validate_embedding(g, lp.witness), tag + " longest path witness");
  for (const auto& p : patterns) {
    const auto hit = has_mono_pattern(g, c, p);
    const bool expect = naive::contains(h, p);
    r.expect(hit.has_value() == expect, tag + " " + to_string(p));
    if (hit) r.expect(validate_embedding(g, *hit), tag + " " + to_string(p) + " witness");
  }
}

void oracle_equivalence(Report& r, const Options& o) {
  const auto patterns = oracle_patterns();
  long colorings = 0;
  for_each_coloring(5, 2, false, [&](const EdgeColoring& g) {
    ++colorings;
    for (Color c : {1, 2}) compare(r, g, c, patterns, "K5#" + std::to_string(colorings) + " color " + std::to_string(c));
    return true;
  });
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < 10000; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    EdgeColoring g(n, k);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) g.set(u, v, std::uniform_int_distribution<int>(1, k)(rng));
    const Color c = std::uniform_int_distribution<int>(1, k)(rng);
    std::vector<PatternSpec> pick;
    for (int j = 0; j < 3; ++j)
      pick.push_back(patterns[std::uniform_int_distribution<std::size_t>(0, patterns.size() - 1)(rng)]);
    compare(r, g, c, pick, "random#" + std::to_string(i));
    ++colorings;
  }
  r.note(std::to_string(colorings) + " colorings");
}

void multipartite(Report& r, const Options& o) {
  std::mt19937_64 rng(o.seed + 11);
  std::uniform_int_distribution<int> parts(1, 6), size(1, 7);
  int cycles = 0, paths = 0;
  while (cycles < 1000) {
    std::vector<int> sizes(static_cast<std::size_t>(parts(rng) + 1));
    for (int& s : sizes) s = size(rng);
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    const int biggest = *std::max_element(sizes.begin(), sizes.end());
    if (total < 3 || total - biggest < biggest) continue;
    ++cycles;
    const auto seq = multipartite_ham(sizes, HamMode::Cycle);
    r.expect(validate_ham(sizes, seq, HamMode::Cycle), "cycle for sizes #" + std::to_string(cycles));
  }
  while (paths < 1000) {
    std::vector<int> sizes(static_cast<std::size_t>(parts(rng)));
    for (int& s : sizes) s = size(rng);
    const int rest = std::accumulate(sizes.begin(), sizes.end(), 0);
    sizes.insert(sizes.begin() + static_cast<std::ptrdiff_t>(rng() % (sizes.size() + 1)), rest + 1);
    ++paths;
    const auto seq = multipartite_ham(sizes, HamMode::Path);
    r.expect(validate_ham(sizes, seq, HamMode::Path), "path for sizes #" + std::to_string(paths));
  }
}

using Body = std::function<void(Report&, const Options&)>;

const std::vector<std::pair<Criterion, Body>>& table() {
  static const std::vector<std::pair<Criterion, Body>> t = {
      {{1, "ramsey-paths", "path-path Ramsey numbers by exhaustive search"}, ramsey_paths},
      {{2, "kipas-linear", "kipas versus linear forests at (4,2)"}, kipas_linear},
      {{3, "kipas-blue-forests", "red-kipas-free colorings hold blue forests (K_6, K_7)"}, kipas_blue_forests},
      {{4, "t-path", "t(P_n) for n = 3, 4, 5"}, t_family},
      {{5, "bk-path", "b_3(P_n) for n = 4, 6"}, bk_family},
      {{6, "witnesses", "lower-bound witness colorings"}, witness_suite},
      {{7, "gr-p5-path6", "gr_4(P_5 : P_6) = 7 in structure mode"}, gr_p5_path6},
      {{8, "k13-structure", "rainbow-star-free 3-colorings of K_5 classify"}, k13_structure},
      {{9, "formula-reductions", "gr_k(K_{1,3} : P_n) reduces to b_k and t"}, formula_reductions},
      {{10, "oracles", "detectors agree with naive enumeration"}, oracle_equivalence},
      {{11, "multipartite-ham", "complete multipartite Hamiltonian cycles and paths"}, multipartite},
  };
  return t;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {{"lemma4.1", "bk-path"}, {"lemma4.2", "t-path"}};
  return a;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = [] {
    std::vector<Criterion> out;
    for (const auto& [c, body] : table()) out.push_back(c);
    return out;
  }();
  return list;
}

std::vector<Outcome> run(const Options& options) {
  std::vector<std::string> wanted;
  for (std::string key : options.only) {
    if (auto it = aliases().find(key); it != aliases().end()) key = it->second;
    const bool known = std::any_of(table().begin(), table().end(), [&](const auto& e) {
      return e.first.key == key || std::to_string(e.first.id) == key;
    });
    if (!known) throw std::invalid_argument("unknown criterion '" + key + "'");
    wanted.push_back(key);
  }
  std::vector<Outcome> out;
  for (const auto& [crit, body] : table()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), crit.key) == wanted.end() &&
        std::find(wanted.begin(), wanted.end(), std::to_string(crit.id)) == wanted.end())
      continue;
    Outcome o;
    o.criterion = crit;
    Report rep;
    const auto t = Clock::now();
    try {
      body(rep, options);
    } catch (const std::exception& e) {
      rep.expect(false, std::string("exception: ") + e.what());
    }
    o.seconds = since(t);
    o.passed = rep.passed();
    o.detail = rep.text();
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace kipas::acceptance
