#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wheelramsey/coloring.hpp"

namespace wheelramsey {

// Contiguous label range [first, first + size) of a named vertex part.
struct Part {
  std::string label;
  Vertex first = 0;
  int size = 0;
  friend bool operator==(const Part&, const Part&) = default;
};

struct BlockSpec {
  std::string family;
  std::vector<Part> parts;
  std::vector<std::pair<std::string, Vertex>> special;  // e.g. {"v0", 12}
  std::vector<std::pair<std::string, long long>> parameters;
  // Informational labels of the sub-structure inside the first block of a
  // blow-up (every block repeats it at its own offset).
  std::vector<std::string> nested;

  int total() const;
  const Part& part(const std::string& label) const;
  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

struct Construction {
  EdgeColoring coloring;
  BlockSpec blocks;
};

enum class ForbiddenPattern { Triangle, K4Minus };

// A small coloring whose classes each avoid a declared pattern.
struct BaseColoring {
  EdgeColoring coloring;
  ForbiddenPattern forbidden;
};

// 2-coloring of K_{3n-3} for even n >= 4: blue inside three parts of size
// n-1, red between parts.
Construction construct_even_lower(int n);

// 2-coloring of K_{2n-1} for odd n >= 5 on parts A, B, C, D of size (n-1)/2
// plus v0. Blue: inside A and C, A-B, B-D, D-C, v0-(A u C). Red elsewhere.
Construction construct_odd_lower(int n);

// Whichever of the two above matches the parity of n.
Construction construct_two_color_lower(int n);

// Color 0 is the 5-cycle 0-1-2-3-4-0, color 1 its complement.
BaseColoring paley5();

// Color 0 is the 3x3 rook's graph (same row or column), color 1 its complement.
BaseColoring rook9();

// Blow-up of `base` (s vertices, l colors): every vertex becomes a block of
// inner.order() vertices. Pairs across blocks i, j take base color of {i, j};
// pairs inside a block take the inner color shifted by l. The result has
// l + inner.num_colors() colors.
Construction blowup(const EdgeColoring& base, const EdgeColoring& inner);
Construction blowup(const EdgeColoring& base, const Construction& inner);

// Iterated blow-up of the two-color lower construction by single-color K3
// (even n) or K2 (odd n), one fresh color per level; k colors in total.
Construction corollary14_family(int k, int n);

// Order of corollary14_family(k, n).
long long corollary14_order(int k, int n);

}  // namespace wheelramsey
