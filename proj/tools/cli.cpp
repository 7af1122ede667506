#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "kipas/coloring.hpp"
#include "kipas/constructions.hpp"
#include "kipas/errors.hpp"
#include "kipas/formulas.hpp"
#include "kipas/patterns.hpp"
#include "kipas/search.hpp"
#include "kipas/structure.hpp"

namespace kipas::cli {

namespace {

using nlohmann::json;

// What a subcommand produced: text lines, the JSON mirror and an exit code.
struct Reply {
  int code = kOk;
  std::vector<std::string> lines;
  json doc = json::object();

  void line(std::string s) { lines.push_back(std::move(s)); }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

json to_json(const ValueOrInterval& v) {
  json j{{"exact", v.exact()}, {"lo", v.lo}};
  j["hi"] = v.hi == kUnbounded ? json(nullptr) : json(v.hi);
  if (!v.caveat.empty()) j["caveat"] = v.caveat;
  return j;
}

json to_json(const Embedding& e) {
  json j{{"pattern", to_string(e.pattern)}, {"map", e.vertex_map}};
  j["color"] = e.color ? json(*e.color) : json(nullptr);
  return j;
}

json to_json(const FamilyDescriptor& d) {
  json choices = json::array();
  for (const auto& c : d.choices) choices.push_back({c.u, c.v, c.color});
  return {{"family", to_string(d.family)}, {"n", d.n},        {"k", d.k},
          {"parts", d.parts},              {"choices", choices}, {"special", d.special},
          {"color_map", d.color_map}};
}

void describe(Reply& r, const FamilyDescriptor& d) {
  std::string parts;
  for (std::size_t i = 0; i < d.parts.size(); ++i) parts += (i ? " | " : "") + join(d.parts[i]);
  if (!d.parts.empty()) r.line("parts " + parts);
  if (!d.special.empty()) r.line("special " + join(d.special));
  if (!d.choices.empty()) {
    std::string s;
    for (const auto& c : d.choices) s += " " + std::to_string(c.u) + "-" + std::to_string(c.v) + "=" + std::to_string(c.color);
    r.line("choices" + s);
  }
  if (!d.color_map.empty()) {
    std::vector<int> map(d.color_map.begin() + 1, d.color_map.end());
    r.line("color-map " + join(map));
  }
}

// Writes the coloring to `path`, or inlines it in the report when path is empty.
void emit_coloring(Reply& r, const std::string& label, const EdgeColoring& g, const std::string& path) {
  const std::string text = write_coloring(g);
  r.doc[label] = {{"n", g.order()}, {"k", g.num_colors()}, {"ecg", text}};
  if (!path.empty()) {
    save_coloring(g, path);
    r.doc[label]["path"] = path;
    r.line(label + " " + path + " K_" + std::to_string(g.order()));
    return;
  }
  r.line(label + " K_" + std::to_string(g.order()));
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) r.line(l);
}

PatternSpec pattern_arg(const std::string& text) {
  try {
    return parse_pattern(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// ---- detect -----------------------------------------------------------------

struct DetectArgs {
  std::string input;
  std::string pattern;
  std::optional<int> color;
  bool any_color = false;
  bool longest_path = false;
  std::optional<int> forest_min_order;
};

Reply detect(const DetectArgs& a) {
  Reply r;
  const EdgeColoring g = load_coloring(a.input);
  auto need_color = [&]() {
    if (!a.color) throw UsageError("--color is required here");
    if (*a.color < 1 || *a.color > g.num_colors()) throw DomainError("color out of range");
    return *a.color;
  };
  if (a.longest_path) {
    const auto res = longest_mono_path(g, need_color());
    r.line("longest-path order " + std::to_string(res.order) + " path " + join(res.witness.vertex_map));
    r.doc = {{"order", res.order}, {"path", res.witness.vertex_map}};
    return r;
  }
  if (a.forest_min_order) {
    const auto res = max_linear_forest(g, need_color(), *a.forest_min_order);
    std::string comps;
    for (std::size_t i = 0; i < res.witness.components.size(); ++i)
      comps += (i ? " | " : "") + join(res.witness.components[i], "-");
    r.line("forest edges " + std::to_string(res.edges) + (comps.empty() ? "" : " components " + comps));
    r.doc = {{"edges", res.edges}, {"components", res.witness.components}};
    return r;
  }
  if (a.pattern.empty()) throw UsageError("one of --pattern, --longest-path, --forest is required");
  std::string text = a.pattern;
  bool rainbow = false;
  if (text.rfind("rainbow:", 0) == 0) {
    rainbow = true;
    text = text.substr(8);
  } else if (text.rfind("mono:", 0) == 0) {
    text = text.substr(5);
  }
  const PatternSpec p = pattern_arg(text);
  std::optional<Embedding> hit;
  if (rainbow) hit = has_rainbow(g, p);
  else if (a.color && !a.any_color) hit = has_mono_pattern(g, need_color(), p);
  else hit = has_mono_pattern_any(g, p);
  if (!hit) {
    r.code = kNegative;
    r.line("absent");
    r.doc = {{"found", false}};
    return r;
  }
  std::string head = "found";
  if (hit->color) head += " color " + std::to_string(*hit->color);
  else head += " rainbow";
  r.line(head + " map " + join(hit->vertex_map));
  r.doc = {{"found", true}, {"embedding", to_json(*hit)}};
  return r;
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::optional<int> n, m, k;
  std::vector<int> parts;
  std::vector<int> special;
  std::vector<std::string> choices;
  std::string output;
  bool verify = false;
};

PairColor parse_choice(const std::string& s) {
  // u-v=c
  PairColor pc;
  char dash = 0, eq = 0;
  std::istringstream in(s);
  if (!(in >> pc.u >> dash >> pc.v >> eq >> pc.color) || dash != '-' || eq != '=' || !in.eof())
    throw UsageError("bad --choice '" + s + "', expected u-v=c");
  return pc;
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required for this family");
  return *v;
}

EdgeColoring generate_coloring(const GenerateArgs& a) {
  const std::string& f = a.family;
  if (f == "bk-path-witness") return witness_bk_path(need(a.k, "--k"), need(a.n, "--n"), a.verify);
  if (f == "t-path-witness") return witness_t_path(need(a.n, "--n"), a.verify);
  if (f == "b3-kipas-witness") return witness_b3_kipas(need(a.n, "--n"), a.verify);
  if (f == "kipas-linear-witness") return witness_kipas_linear(need(a.n, "--n"), need(a.m, "--m"), a.verify);
  if (f == "gamma1") return witness_small_kipas(2, a.verify);
  if (f == "gamma2") return witness_small_kipas(3, a.verify);

  FamilyDescriptor d;
  if (f == "bk") d.family = Family::Bk;
  else if (f == "t") d.family = Family::T;
  else if (f == "g1") d.family = Family::G1;
  else if (f == "g2") d.family = Family::G2;
  else if (f == "g3") d.family = Family::G3;
  else throw UsageError("unknown family '" + f + "'");

  int next = 0;
  for (int size : a.parts) {
    if (size < 0) throw UsageError("part sizes must be nonnegative");
    std::vector<int> part;
    for (int i = 0; i < size; ++i) part.push_back(next++);
    d.parts.push_back(std::move(part));
  }
  for (const auto& c : a.choices) d.choices.push_back(parse_choice(c));
  d.special = a.special;
  switch (d.family) {
    case Family::Bk:
      if (a.parts.empty()) throw UsageError("--parts is required for bk");
      d.n = next;
      d.k = a.k ? *a.k : static_cast<int>(d.parts.size()) + 1;
      break;
    case Family::T:
    case Family::G1:
      if (a.parts.empty()) throw UsageError("--parts is required for " + f);
      d.n = next;
      d.k = 3;
      break;
    default:
      d.n = need(a.n, "--n");
      d.k = 4;
      if (d.special.empty()) d.special = d.family == Family::G2 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2};
      break;
  }
  if (a.n && *a.n != d.n) throw UsageError("--n disagrees with the part sizes");
  return build_family(d);
}

Reply generate(const GenerateArgs& a) {
  Reply r;
  const EdgeColoring g = generate_coloring(a);
  r.doc["family"] = a.family;
  if (a.output.empty()) {
    // Plain output is the bare file so it can be redirected.
    std::istringstream in(write_coloring(g));
    for (std::string l; std::getline(in, l);) r.line(l);
    r.doc["coloring"] = {{"n", g.order()}, {"k", g.num_colors()}, {"ecg", write_coloring(g)}};
  } else {
    emit_coloring(r, "coloring", g, a.output);
  }
  return r;
}

// ---- compute ----------------------------------------------------------------

struct SearchArgs {
  int threads = 1;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;

  SearchOptions options() const { return {threads, max_nodes, max_seconds}; }
};

struct ComputeArgs {
  std::string quantity;
  std::string red, blue, target;
  std::optional<int> k;
  int max_n = 0;
  std::string output;
  SearchArgs search;
};

Reply compute(const ComputeArgs& a) {
  SearchReport rep;
  if (a.quantity == "ramsey") {
    if (a.red.empty() || a.blue.empty()) throw UsageError("ramsey needs --red and --blue");
    rep = brute_force_ramsey(pattern_arg(a.red), pattern_arg(a.blue), a.max_n, a.search.options());
  } else if (a.quantity == "bk") {
    if (a.target.empty()) throw UsageError("bk needs --target");
    rep = compute_bk(need(a.k, "--k"), pattern_arg(a.target), a.max_n, a.search.options());
  } else if (a.quantity == "t") {
    if (a.target.empty()) throw UsageError("t needs --target");
    rep = compute_t(pattern_arg(a.target), a.max_n, a.search.options());
  } else {
    throw UsageError("unknown quantity '" + a.quantity + "'");
  }
  Reply r;
  r.code = rep.value.exact() ? kOk : kNegative;
  r.line(to_string(rep.value));
  if (!rep.value.caveat.empty()) r.line("caveat " + rep.value.caveat);
  r.line("quantity " + rep.quantity);
  r.line("nodes " + std::to_string(rep.nodes_explored));
  r.line("threads " + std::to_string(rep.threads));
  r.doc = {{"quantity", rep.quantity},
           {"value", to_json(rep.value)},
           {"nodes", rep.nodes_explored},
           {"seconds", rep.wall_seconds},
           {"threads", rep.threads}};
  if (rep.extremal_witness) emit_coloring(r, "witness", *rep.extremal_witness, a.output);
  else r.line("witness none");
  return r;
}

// ---- formula ----------------------------------------------------------------

struct FormulaArgs {
  std::string id;
  std::optional<int> k, n, m;
  std::optional<int> l1, j1, l2, j2;
  int min_component = 2;
  bool trust = false;
};

ValueOrInterval evaluate(const FormulaArgs& a) {
  const std::string& id = a.id;
  auto n = [&] { return need(a.n, "--n"); };
  auto m = [&] { return need(a.m, "--m"); };
  auto k = [&] { return need(a.k, "--k"); };
  if (id == "path-path") return r_path_path(n(), m());
  if (id == "linear-forests")
    return r_linear_forests(need(a.l1, "--l1"), need(a.j1, "--j1"), need(a.l2, "--l2"), need(a.j2, "--j2"));
  if (id == "path-star") return r_path_star(m(), n(), a.trust);
  if (id == "star-star") return r_star_star(n(), m());
  if (id == "path-kipas") return r_path_kipas(n(), m());
  if (id == "star-kipas") return r_star_kipas(n(), m());
  if (id == "kipas-linear") return r_kipas_linear_family(n(), m(), a.min_component);
  if (id == "bk-path") return bk_path(k(), n());
  if (id == "t-path") return t_path(n());
  if (id == "b3-kipas") return b3_kipas(n());
  if (id == "t-kipas-upper") return t_kipas_upper(n());
  if (id == "gr-p5-path") return gr_p5_path(k(), n());
  if (id == "gr-p4plus-path") return gr_p4plus_path(k(), n());
  if (id == "gr-k13-path") return gr_k13_path(k(), n());
  if (id == "gr3-k13-kipas") return gr3_k13_kipas(n());
  throw UsageError("unknown formula id '" + id + "'");
}

Reply formula(const FormulaArgs& a) {
  Reply r;
  const auto v = evaluate(a);
  r.code = v.exact() ? kOk : kNegative;
  r.line(to_string(v));
  if (!v.caveat.empty()) r.line("caveat " + v.caveat);
  r.doc = {{"id", a.id}, {"value", to_json(v)}};
  return r;
}

// ---- check ------------------------------------------------------------------

struct CheckArgs {
  std::string lemma;
  int n = 0;
  std::optional<int> a;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::string output;
  SearchArgs search;
};

Reply check(const CheckArgs& c) {
  UniversalQuery q;
  q.forbidden = {{1, PatternSpec::kipas(c.n)}};
  bool randomized = false;
  if (c.lemma == "3.1i") {
    if (c.a && *c.a != 1) throw DomainError("3.1i fixes a = 1");
    if (c.n < 4) throw DomainError("3.1i needs n >= 4");
    q.n = c.n + 1;
    q.required = {{2, PatternSpec::linear_forest_exact({2, 2})}, {2, PatternSpec::path(3)}};
  } else if (c.lemma == "3.1ii") {
    if (c.a && *c.a != 2) throw DomainError("3.1ii fixes a = 2");
    if (c.n < 5) throw DomainError("3.1ii needs n >= 5");
    q.n = c.n + 2;
    q.required = {{2, PatternSpec::linear_forest_exact({3, 3})},
                  {2, PatternSpec::path(5)},
                  {2, PatternSpec::linear_forest_exact({4, 2})}};
  } else if (c.lemma == "3.2") {
    const int a = need(c.a, "--a");
    if (a < 3 || a > c.n / 4) throw DomainError("3.2 needs 3 <= a <= floor(n/4)");
    q.n = c.n + a;
    q.required = {{2, PatternSpec::linear_forest(2 * a, 3)}};
    randomized = !c.exhaustive;
  } else {
    throw UsageError("unknown lemma '" + c.lemma + "'");
  }
  const CheckResult res =
      randomized ? universal_check_random(q, c.samples, c.seed, c.search.options()) : universal_check(q, c.search.options());
  Reply r;
  r.code = res.holds ? kOk : kNegative;
  r.line(res.holds ? "holds" : "counterexample");
  r.line("N " + std::to_string(q.n));
  if (res.randomized)
    r.line("randomized refutation search over " + std::to_string(res.colorings_checked) + " samples, seed " +
           std::to_string(c.seed) + "; not a proof");
  else
    r.line("leaves " + std::to_string(res.colorings_checked));
  r.line("nodes " + std::to_string(res.nodes_explored));
  r.doc = {{"holds", res.holds},
           {"N", q.n},
           {"randomized", res.randomized},
           {"leaves", res.colorings_checked},
           {"nodes", res.nodes_explored},
           {"seconds", res.wall_seconds}};
  if (res.randomized) r.doc["seed"] = c.seed;
  if (res.counterexample) emit_coloring(r, "counterexample", *res.counterexample, c.output);
  return r;
}

// ---- grverify ---------------------------------------------------------------

struct GrArgs {
  int k = 0;
  std::string rainbow, target;
  int N = 0;
  std::string mode = "structure";
  std::string output;
  SearchArgs search;
};

Reply grverify(const GrArgs& a) {
  GrMode mode;
  if (a.mode == "full") mode = GrMode::Full;
  else if (a.mode == "structure") mode = GrMode::Structure;
  else throw UsageError("--mode must be full or structure");
  const auto res = gr_desk_verify(a.k, pattern_arg(a.rainbow), pattern_arg(a.target), a.N, mode, a.search.options());
  Reply r;
  r.code = res.holds ? kOk : kNegative;
  r.line(res.holds ? "holds" : "counterexample");
  r.line("colorings " + std::to_string(res.colorings_checked));
  r.line("nodes " + std::to_string(res.nodes_explored));
  r.doc = {{"holds", res.holds},
           {"mode", a.mode},
           {"colorings", res.colorings_checked},
           {"nodes", res.nodes_explored},
           {"seconds", res.wall_seconds}};
  if (res.counterexample) emit_coloring(r, "counterexample", *res.counterexample, a.output);
  return r;
}

// ---- classify ---------------------------------------------------------------

Reply classify(const std::string& input, const std::string& context) {
  RainbowContext ctx;
  try {
    ctx = parse_context(context);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto c = classify_structure(load_coloring(input), ctx);
  Reply r;
  r.code = c.classified() ? kOk : kNegative;
  r.line(c.label());
  r.doc = {{"label", c.label()}, {"context", to_string(ctx)}};
  if (c.descriptor) {
    describe(r, *c.descriptor);
    r.doc["descriptor"] = to_json(*c.descriptor);
  }
  return r;
}

// ---- selftest ---------------------------------------------------------------

Reply selftest(const acceptance::Options& o) {
  Reply r;
  const auto outcomes = acceptance::run(o);
  json rows = json::array();
  int failed = 0;
  for (const auto& x : outcomes) {
    std::ostringstream line;
    line.precision(3);
    line << (x.passed ? "PASS " : "FAIL ") << x.criterion.id << " " << x.criterion.key << " (" << std::fixed
         << x.seconds << "s) " << x.criterion.title << ": " << x.detail;
    r.line(line.str());
    rows.push_back({{"id", x.criterion.id},
                    {"key", x.criterion.key},
                    {"passed", x.passed},
                    {"seconds", x.seconds},
                    {"detail", x.detail}});
    failed += x.passed ? 0 : 1;
  }
  r.line(std::to_string(outcomes.size() - static_cast<std::size_t>(failed)) + "/" + std::to_string(outcomes.size()) +
         " criteria passed");
  r.doc = {{"criteria", rows}, {"failed", failed}};
  r.code = failed ? kNegative : kOk;
  return r;
}

void add_search_flags(CLI::App* sub, SearchArgs& s) {
  sub->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--max-nodes", s.max_nodes, "Search node budget (0 = default)");
  sub->add_option("--max-seconds", s.max_seconds, "Wall-clock budget (0 = none)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey and Gallai-Ramsey computations for kipas, paths and linear forests", "kipas"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON document instead of text");

  DetectArgs det;
  auto* d = app.add_subcommand("detect", "Find a pattern in a coloring");
  d->add_option("--input", det.input, "ecg file")->required();
  d->add_option("--pattern", det.pattern, "mono:<pattern> or rainbow:<pattern>");
  d->add_option("--color", det.color, "Color class to search");
  d->add_flag("--any-color", det.any_color, "Search every color class");
  d->add_flag("--longest-path", det.longest_path, "Longest path in --color");
  d->add_option("--forest", det.forest_min_order, "Maximum linear forest in --color with this component order");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a family member or witness coloring");
  g->add_option("--family", gen.family, "Family or witness name")->required();
  g->add_option("--n", gen.n);
  g->add_option("--m", gen.m);
  g->add_option("--k", gen.k);
  g->add_option("--parts", gen.parts, "Part sizes, e.g. 2,2,3")->delimiter(',');
  g->add_option("--special", gen.special, "Special vertices")->delimiter(',');
  g->add_option("--choice", gen.choices, "Inside-part color u-v=c (repeatable)");
  g->add_option("-o,--output", gen.output, "Output ecg file (default stdout)");
  g->add_flag("--verify", gen.verify, "Re-check the witness with the detectors");

  ComputeArgs comp;
  auto* c = app.add_subcommand("compute", "Exhaustive search for a Ramsey-type threshold");
  c->add_option("--quantity", comp.quantity, "ramsey, bk or t")->required();
  c->add_option("--red", comp.red);
  c->add_option("--blue", comp.blue);
  c->add_option("--target", comp.target);
  c->add_option("--k", comp.k);
  c->add_option("--max-n", comp.max_n, "Largest order to search")->required();
  c->add_option("-o,--output", comp.output, "Extremal witness ecg file");
  add_search_flags(c, comp.search);

  FormulaArgs form;
  auto* f = app.add_subcommand("formula", "Evaluate a closed-form value");
  f->add_option("--id", form.id)->required();
  f->add_option("--k", form.k);
  f->add_option("--n", form.n);
  f->add_option("--m", form.m);
  f->add_option("--l1", form.l1, "Order of the first linear forest");
  f->add_option("--j1", form.j1, "Odd components of the first linear forest");
  f->add_option("--l2", form.l2, "Order of the second linear forest");
  f->add_option("--j2", form.j2, "Odd components of the second linear forest");
  f->add_option("--min-component", form.min_component, "Component order floor for kipas-linear")
      ->check(CLI::IsMember({2, 3}));
  f->add_flag("--trust", form.trust, "Take the published path-star value as exact");

  CheckArgs chk;
  auto* ch = app.add_subcommand("check", "Verify a blue-forest statement over all colorings");
  ch->add_option("--lemma", chk.lemma, "3.1i, 3.1ii or 3.2")->required();
  ch->add_option("--n", chk.n)->required();
  ch->add_option("--a", chk.a);
  ch->add_option("--samples", chk.samples, "Random samples for 3.2");
  ch->add_option("--seed", chk.seed, "Seed for 3.2 sampling");
  ch->add_flag("--exhaustive", chk.exhaustive, "Enumerate instead of sampling for 3.2");
  ch->add_option("-o,--output", chk.output, "Counterexample ecg file");
  add_search_flags(ch, chk.search);

  GrArgs gr;
  auto* v = app.add_subcommand("grverify", "Check a Gallai-Ramsey value at one order");
  v->add_option("--k", gr.k)->required();
  v->add_option("--rainbow", gr.rainbow)->required();
  v->add_option("--target", gr.target)->required();
  v->add_option("--N", gr.N)->required();
  v->add_option("--mode", gr.mode, "full or structure");
  v->add_option("-o,--output", gr.output, "Counterexample ecg file");
  add_search_flags(v, gr.search);

  std::string cls_input, cls_context;
  auto* cl = app.add_subcommand("classify", "Name the structure of a rainbow-free coloring");
  cl->add_option("--input", cls_input)->required();
  cl->add_option("--context", cls_context, "p5, k13 or p4plus")->required();

  acceptance::Options st;
  auto* s = app.add_subcommand("selftest", "Run the acceptance suite");
  s->add_option("--only", st.only, "Criterion keys or ids")->delimiter(',');
  s->add_option("--seed", st.seed);
  s->add_option("--threads", st.threads)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kOk;
    err << app.help();
    return kError;
  }

  Reply reply;
  try {
    if (*d) reply = detect(det);
    else if (*g) reply = generate(gen);
    else if (*c) reply = compute(comp);
    else if (*f) reply = formula(form);
    else if (*ch) reply = check(chk);
    else if (*v) reply = grverify(gr);
    else if (*cl) reply = classify(cls_input, cls_context);
    else reply = selftest(st);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << "\n";
    return kError;
  } catch (const DescriptorError& e) {
    err << "descriptor error: " << e.what() << "\n";
    return kError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::logic_error& e) {
    // Raised by --verify when a witness fails its own claim.
    err << "verification failed: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  if (as_json) {
    reply.doc["exit"] = reply.code;
    out << reply.doc.dump(2) << "\n";
  } else {
    for (const auto& l : reply.lines) out << l << "\n";
  }
  return reply.code;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace kipas::cli
