#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kipas/coloring.hpp"
#include "kipas/formulas.hpp"
#include "kipas/patterns.hpp"
#include "kipas/structure.hpp"

namespace kipas {

struct SearchOptions {
  int threads = 1;
  std::uint64_t max_nodes = 0;  // 0 picks the operation's default
  double max_seconds = 0;       // 0 means no time limit
};

struct SearchReport {
  std::string quantity;
  ValueOrInterval value;
  // Target-free coloring on value-1 vertices; absent when the family is empty there.
  std::optional<EdgeColoring> extremal_witness;
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0;
  int threads = 1;
};

// Largest order accepted by each enumeration.
inline constexpr int kRamseyMaxN = 9;
inline constexpr int kBkMaxN = 14;
inline constexpr int kTMaxN = 12;
inline constexpr int kUniversalMaxN = 11;

// Smallest N <= max_n such that every red/blue coloring of K_N has a red `red`
// or a blue `blue`. Returns [max_n+1, inf) when no N <= max_n works.
SearchReport brute_force_ramsey(const PatternSpec& red, const PatternSpec& blue, int max_n,
                                const SearchOptions& options = {});

// Smallest N such that every member of B_k(N) holds a monochromatic target.
// Members use all k colors; N starts at 2(k-1), the smallest order with members.
SearchReport compute_bk(int k, const PatternSpec& target, int max_n, const SearchOptions& options = {});

// Smallest N >= 3 such that every member of T(N) holds a monochromatic target.
SearchReport compute_t(const PatternSpec& target, int max_n, const SearchOptions& options = {});

struct ColoredPattern {
  Color color = 1;
  PatternSpec pattern;
};

// "Every coloring of K_n avoiding all forbidden patterns contains some required pattern."
struct UniversalQuery {
  int n = 0;
  int colors = 2;
  std::vector<ColoredPattern> forbidden;
  std::vector<PatternSpec> forbidden_rainbow;
  std::vector<ColoredPattern> required;
};

struct CheckResult {
  bool holds = true;
  std::optional<EdgeColoring> counterexample;
  std::uint64_t nodes_explored = 0;
  std::uint64_t colorings_checked = 0;  // complete colorings (or samples) examined
  double wall_seconds = 0;
  bool randomized = false;
};

// Exhaustive check. The first counterexample in enumeration order is returned.
CheckResult universal_check(const UniversalQuery& query, const SearchOptions& options = {});

// Random refutation search: `samples` colorings, each drawn with its own color
// bias from a stream seeded by `seed`. "holds" only means none was refuted.
CheckResult universal_check_random(const UniversalQuery& query, std::uint64_t samples, std::uint64_t seed,
                                   const SearchOptions& options = {});

enum class GrMode { Full, Structure };

// Checks that every coloring of K_N using exactly k colors has a rainbow
// `rainbow` or a monochromatic `target`. Structure mode enumerates only the
// shapes the structure classification allows for the rainbow pattern (which
// must be path:5, star:3 or p4plus).
CheckResult gr_desk_verify(int k, const PatternSpec& rainbow, const PatternSpec& target, int N, GrMode mode,
                           const SearchOptions& options = {});

// Rainbow context for a structure-mode rainbow pattern; throws CapabilityError otherwise.
RainbowContext context_for_rainbow(const PatternSpec& rainbow);

// Calls `visit` for every coloring of K_n with colors 1..k (all colors used
// when `surjective`), in lexicographic edge order. Stops when `visit` returns false.
void for_each_coloring(int n, int k, bool surjective, const std::function<bool(const EdgeColoring&)>& visit);

}  // namespace kipas
