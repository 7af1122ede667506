#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kipas/coloring.hpp"
#include "kipas/constructions.hpp"

namespace kipas {

// Which rainbow pattern the coloring is assumed to avoid.
enum class RainbowContext { P5, K13, P4plus };

RainbowContext parse_context(std::string_view text);  // "p5", "k13", "p4plus"
std::string to_string(RainbowContext c);

struct Classification {
  std::optional<FamilyDescriptor> descriptor;  // absent when unclassified

  bool classified() const { return descriptor.has_value(); }
  // Family name of the matched case, or "unclassified".
  std::string label() const { return descriptor ? to_string(descriptor->family) : "unclassified"; }
};

// Tries the dominant-color form first, then the shapes allowed by the context:
// P5: shape-ii..shape-v; K13: G1; P4plus: G2 then G3. Colors are renumbered
// freely; the descriptor's color_map records the renumbering. Colorings using
// fewer than 3 (K13) or 4 (P5, P4plus) colors are unclassified.
Classification classify_structure(const EdgeColoring& coloring, RainbowContext context);

// Membership under the coloring's own color numbering. For Bk and Dominant the
// family's k is the coloring's declared color count. With `require_all_colors`
// every declared color must appear.
std::optional<FamilyDescriptor> is_member(const EdgeColoring& coloring, Family family,
                                          bool require_all_colors = false);

// True when the descriptor builds exactly this coloring (ignoring the declared
// color count and exact flag).
bool descriptor_matches(const EdgeColoring& coloring, const FamilyDescriptor& d);

// True iff color class c is a disjoint union of stars.
bool star_forest_check(const EdgeColoring& coloring, Color c);

enum class HamMode { Cycle, Path };

// Hamiltonian cycle or path of the complete multipartite graph whose parts are
// consecutive vertex ranges with the given sizes, built by peeling one vertex
// from each largest part, recursing, and splicing the peeled vertices back.
std::vector<int> multipartite_ham(const std::vector<int>& part_sizes, HamMode mode);

bool validate_ham(const std::vector<int>& part_sizes, const std::vector<int>& sequence, HamMode mode);

}  // namespace kipas
