#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wheelramsey/graph.hpp"

namespace wheelramsey {

using Color = int;

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;
inline constexpr int kMaxColors = 255;

// Position of the pair {u, v}, u < v, in lexicographic order over all pairs
// of 0..order-1.
inline std::size_t pair_rank(int order, Vertex u, Vertex v) {
  const auto uu = static_cast<std::size_t>(u);
  return uu * (2 * static_cast<std::size_t>(order) - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

inline std::size_t pair_count(int order) {
  return static_cast<std::size_t>(order) * static_cast<std::size_t>(order > 0 ? order - 1 : 0) / 2;
}

// Edge coloring of the complete graph K_order with colors 0..num_colors-1,
// stored as a flat upper-triangle array in pair-rank order.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int order, int num_colors, Color fill = 0);
  static EdgeColoring from_pairs(int order, int num_colors, std::vector<std::uint8_t> colors);

  int order() const { return order_; }
  int num_colors() const { return num_colors_; }

  Color color(Vertex u, Vertex v) const;
  void set_color(Vertex u, Vertex v, Color c);

  // Pair colors in pair-rank order.
  std::span<const std::uint8_t> pair_colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;
  void check_color(Color c) const;

  int order_ = 0;
  int num_colors_ = 0;
  std::vector<std::uint8_t> colors_;
};

// Spanning subgraph formed by all pairs of color c.
Graph color_class(const EdgeColoring& coloring, Color c);

// Color permutation: new color of pair = mapping[old color]. `mapping` must be
// a bijection on 0..num_colors-1 unless `num_colors` is raised explicitly.
EdgeColoring relabel_colors(const EdgeColoring& coloring, std::span<const Color> mapping, int num_colors = -1);

// Swaps colors 0 and 1 of a 2-coloring.
EdgeColoring swap_red_blue(const EdgeColoring& coloring);

// Vertex permutation: result.color(perm[u], perm[v]) == coloring.color(u, v).
EdgeColoring permute_vertices(const EdgeColoring& coloring, std::span<const Vertex> perm);

EdgeColoring single_color_complete(int order);

}  // namespace wheelramsey
