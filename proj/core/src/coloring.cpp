#include "wheelramsey/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wheelramsey {

EdgeColoring::EdgeColoring(int order, int num_colors, Color fill) : order_(order), num_colors_(num_colors) {
  if (order < 1 || order > kMaxOrder) throw std::domain_error("coloring order " + std::to_string(order) + " out of range");
  if (num_colors < 1 || num_colors > kMaxColors) {
    throw std::domain_error("number of colors " + std::to_string(num_colors) + " out of range");
  }
  check_color(fill);
  colors_.assign(pair_count(order), static_cast<std::uint8_t>(fill));
}

EdgeColoring EdgeColoring::from_pairs(int order, int num_colors, std::vector<std::uint8_t> colors) {
  EdgeColoring out(order, num_colors);
  if (colors.size() != pair_count(order)) {
    throw std::domain_error("expected " + std::to_string(pair_count(order)) + " pair colors, got " +
                            std::to_string(colors.size()));
  }
  for (std::uint8_t c : colors) out.check_color(c);
  out.colors_ = std::move(colors);
  return out;
}

void EdgeColoring::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_ || u == v) {
    throw std::domain_error("invalid pair {" + std::to_string(u) + ", " + std::to_string(v) + "} for order " +
                            std::to_string(order_));
  }
}

void EdgeColoring::check_color(Color c) const {
  if (c < 0 || c >= num_colors_) {
    throw std::domain_error("color " + std::to_string(c) + " outside 0.." + std::to_string(num_colors_ - 1));
  }
}

Color EdgeColoring::color(Vertex u, Vertex v) const {
  check_pair(u, v);
  if (u > v) std::swap(u, v);
  return colors_[pair_rank(order_, u, v)];
}

void EdgeColoring::set_color(Vertex u, Vertex v, Color c) {
  check_pair(u, v);
  check_color(c);
  if (u > v) std::swap(u, v);
  colors_[pair_rank(order_, u, v)] = static_cast<std::uint8_t>(c);
}

Graph color_class(const EdgeColoring& coloring, Color c) {
  if (c < 0 || c >= coloring.num_colors()) {
    throw std::domain_error("color " + std::to_string(c) + " outside 0.." + std::to_string(coloring.num_colors() - 1));
  }
  const int n = coloring.order();
  Graph g(n);
  auto colors = coloring.pair_colors();
  std::size_t rank = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++rank)
      if (colors[rank] == c) g.add_edge(u, v);
  return g;
}

EdgeColoring relabel_colors(const EdgeColoring& coloring, std::span<const Color> mapping, int num_colors) {
  if (static_cast<int>(mapping.size()) != coloring.num_colors()) {
    throw std::domain_error("color mapping must cover every color");
  }
  if (num_colors < 0) num_colors = coloring.num_colors();
  std::vector<std::uint8_t> pairs(coloring.pair_colors().begin(), coloring.pair_colors().end());
  for (auto& c : pairs) c = static_cast<std::uint8_t>(mapping[c]);
  return EdgeColoring::from_pairs(coloring.order(), num_colors, std::move(pairs));
}

EdgeColoring swap_red_blue(const EdgeColoring& coloring) {
  if (coloring.num_colors() != 2) throw std::domain_error("red/blue swap needs a 2-coloring");
  const Color mapping[] = {kBlue, kRed};
  return relabel_colors(coloring, mapping);
}

EdgeColoring permute_vertices(const EdgeColoring& coloring, std::span<const Vertex> perm) {
  const int n = coloring.order();
  if (static_cast<int>(perm.size()) != n) throw std::domain_error("permutation size mismatch");
  std::vector<bool> hit(n, false);
  for (Vertex p : perm) {
    if (p < 0 || p >= n || hit[p]) throw std::domain_error("not a permutation");
    hit[p] = true;
  }
  EdgeColoring out(n, coloring.num_colors());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.set_color(perm[u], perm[v], coloring.color(u, v));
  return out;
}

EdgeColoring single_color_complete(int order) { return EdgeColoring(order, 1, 0); }

}  // namespace wheelramsey
