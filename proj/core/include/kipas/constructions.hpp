#pragma once

#include <string>
#include <vector>

#include "kipas/coloring.hpp"

namespace kipas {

// Coloring families. Bk, T, G1, G2, G3 are the constructive families; the
// Dominant and Shape* values describe the remaining rainbow-P_5-free shapes
// and are produced by the structure classifier.
enum class Family {
  Bk,        // k-1 parts of size >= 2, cross pairs color 1, part i inside {1, i+1}
  T,         // three nonempty parts, cross colors 1/2/3 by part pair
  G1,        // as T but at most one part may be empty
  G2,        // one color-2 edge xy, other x-edges 3, other y-edges 4, rest 1
  G3,        // rainbow triangle abc (ab=2, bc=3, ac=4), rest 1
  Dominant,  // supports of colors 2..k pairwise disjoint (no size floor)
  Shape2,    // K_n - a monochromatic
  Shape3,    // E2={ab}, E3={ac}, bc in E4 plus some a-edges, rest 1
  Shape4,    // {ab} in E2 within {ab,cd}, E3={ac,bd}, E4={ad,bc}, rest 1
  Shape5,    // the sporadic 4-coloring of K_5
};

std::string to_string(Family f);

// Explicit color for one pair; any pair not listed takes its family default.
struct PairColor {
  int u = 0;
  int v = 0;
  Color color = 1;
};

struct FamilyDescriptor {
  Family family = Family::Bk;
  int n = 0;
  int k = 0;  // colors; fixed at 3 for T/G1 and 4 for G2/G3/Shape*
  // Bk/Dominant: parts[i] is the part whose inside uses {1, i+2}.
  // T/G1: parts[0..2] with inside colors {1,3}, {1,2}, {2,3}.
  std::vector<std::vector<int>> parts;
  // Inside-part colors for Bk/T/G1/Dominant; the a-edges for Shape2/Shape3;
  // the optional cd edge for Shape4.
  std::vector<PairColor> choices;
  // G2: x, y. G3 and Shape3: a, b, c. Shape2: a. Shape4: a, b, c, d. Shape5: a..e.
  std::vector<int> special;
  // color_map[f] is the actual color playing family color f (index 0 unused).
  // Empty means the identity.
  std::vector<Color> color_map;
};

// With `verify`, each witness generator re-checks its avoidance claim with the
// detectors and throws std::logic_error if it fails.

// Builds the coloring a descriptor determines. Throws DescriptorError naming
// the violated clause. The exact flag is set when every color is used.
EdgeColoring build_family(const FamilyDescriptor& d);

// Red (color 1) clique on n vertices plus ceil(m/2)-1 vertices whose pairs are
// all blue (color 2).
EdgeColoring witness_kipas_linear(int n, int m, bool verify = false);

// B_k member on ceil((3n-3)/2)-1 vertices without a monochromatic P_n.
EdgeColoring witness_bk_path(int k, int n, bool verify = false);
FamilyDescriptor witness_bk_path_descriptor(int k, int n);

// T member on t(P_n)-1 vertices with each part internally in its own color.
EdgeColoring witness_t_path(int n, bool verify = false);
FamilyDescriptor witness_t_path_descriptor(int n);

// B_3 member on floor(5n/2)-1 (odd n) or floor(5n/2)-2 (even n) vertices
// without a monochromatic kipas. Vertices 0..n-1 form A, then B_1, B_2, B_3.
EdgeColoring witness_b3_kipas(int n, bool verify = false);
FamilyDescriptor witness_b3_kipas_descriptor(int n);

// n = 2: K_4 with color 1 = K_{2,2} on {0,1}|{2,3}, 01 color 2, 23 color 3.
// n = 3: K_6 with color 1 = K_{3,3} on {0,1,2}|{3,4,5}, the triangles colors 2 and 3.
EdgeColoring witness_small_kipas(int n, bool verify = false);

}  // namespace kipas
