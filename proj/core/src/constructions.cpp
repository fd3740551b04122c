#include "wheelramsey/constructions.hpp"

#include <stdexcept>

namespace wheelramsey {

int BlockSpec::total() const {
  int t = static_cast<int>(special.size());
  for (const Part& p : parts) t += p.size;
  return t;
}

const Part& BlockSpec::part(const std::string& label) const {
  for (const Part& p : parts)
    if (p.label == label) return p;
  throw std::out_of_range("no part labelled " + label);
}

Construction construct_even_lower(int n) {
  if (n < 4 || n % 2 != 0) throw std::domain_error("even lower construction needs even n >= 4, got " + std::to_string(n));
  const int part = n - 1;
  const int order = 3 * part;
  EdgeColoring coloring(order, 2, kRed);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (u / part == v / part) coloring.set_color(u, v, kBlue);

  BlockSpec spec;
  spec.family = "even-lower";
  spec.parts = {{"A", 0, part}, {"B", part, part}, {"C", 2 * part, part}};
  spec.parameters = {{"n", n}};
  return {std::move(coloring), std::move(spec)};
}

Construction construct_odd_lower(int n) {
  if (n < 5 || n % 2 == 0) throw std::domain_error("odd lower construction needs odd n >= 5, got " + std::to_string(n));
  const int h = (n - 1) / 2;
  const int order = 2 * n - 1;
  enum Block { A, B, C, D, V0 };
  auto block_of = [h](Vertex v) { return static_cast<Block>(v / h); };

  auto is_blue = [](Block x, Block y) {
    if (x > y) std::swap(x, y);
    if (x == y) return x == A || x == C;
    return (x == A && y == B) || (x == B && y == D) || (x == C && y == D) || (x == A && y == V0) ||
           (x == C && y == V0);
  };

  EdgeColoring coloring(order, 2, kRed);
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (is_blue(block_of(u), block_of(v))) coloring.set_color(u, v, kBlue);

  BlockSpec spec;
  spec.family = "odd-lower";
  spec.parts = {{"A", 0, h}, {"B", h, h}, {"C", 2 * h, h}, {"D", 3 * h, h}};
  spec.special = {{"v0", 4 * h}};
  spec.parameters = {{"n", n}};
  return {std::move(coloring), std::move(spec)};
}

Construction construct_two_color_lower(int n) {
  return n % 2 == 0 ? construct_even_lower(n) : construct_odd_lower(n);
}

BaseColoring paley5() {
  EdgeColoring coloring(5, 2, 1);
  for (Vertex v = 0; v < 5; ++v) coloring.set_color(v, (v + 1) % 5, 0);
  return {std::move(coloring), ForbiddenPattern::Triangle};
}

BaseColoring rook9() {
  EdgeColoring coloring(9, 2, 1);
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) coloring.set_color(u, v, 0);
  return {std::move(coloring), ForbiddenPattern::K4Minus};
}

Construction blowup(const EdgeColoring& base, const EdgeColoring& inner) {
  const int s = base.order();
  const int t = inner.order();
  if (s < 2) throw std::domain_error("blow-up base needs at least 2 vertices");
  if (t < 1) throw std::domain_error("blow-up blocks need at least 1 vertex");
  const long long order = static_cast<long long>(s) * t;
  if (order > kMaxOrder) throw std::domain_error("blow-up order " + std::to_string(order) + " exceeds limit");
  const int shift = base.num_colors();
  const int colors = shift + inner.num_colors();
  if (colors > kMaxColors) throw std::domain_error("blow-up uses too many colors");

  EdgeColoring out(static_cast<int>(order), colors);
  for (Vertex x = 0; x < order; ++x) {
    for (Vertex y = x + 1; y < order; ++y) {
      const int bx = x / t, by = y / t;
      out.set_color(x, y, bx == by ? inner.color(x % t, y % t) + shift : base.color(bx, by));
    }
  }

  BlockSpec spec;
  spec.family = "blowup";
  for (int i = 0; i < s; ++i) spec.parts.push_back({"V" + std::to_string(i + 1), i * t, t});
  spec.parameters = {{"base_order", s}, {"base_colors", shift}, {"block_size", t}};
  return {std::move(out), std::move(spec)};
}

Construction blowup(const EdgeColoring& base, const Construction& inner) {
  Construction out = blowup(base, inner.coloring);
  out.blocks.nested.push_back("V1:" + inner.blocks.family);
  for (const Part& p : inner.blocks.parts) out.blocks.nested.push_back("V1." + p.label);
  for (const auto& [label, v] : inner.blocks.special) out.blocks.nested.push_back("V1." + label);
  for (const auto& label : inner.blocks.nested) out.blocks.nested.push_back("V1." + label);
  return out;
}

long long corollary14_order(int k, int n) {
  if (k < 2) throw std::domain_error("corollary family needs k >= 2");
  if (n < 4) throw std::domain_error("corollary family needs n >= 4");
  long long order = n % 2 == 0 ? 3LL * (n - 1) : 2LL * n - 1;
  for (int level = 2; level < k; ++level) order *= n % 2 == 0 ? 3 : 2;
  return order;
}

Construction corollary14_family(int k, int n) {
  const long long order = corollary14_order(k, n);
  if (order > kMaxOrder) throw std::domain_error("family order " + std::to_string(order) + " exceeds limit");
  Construction current = construct_two_color_lower(n);
  const EdgeColoring base = single_color_complete(n % 2 == 0 ? 3 : 2);
  for (int level = 2; level < k; ++level) current = blowup(base, current);
  current.blocks.family = "cor14";
  current.blocks.parameters = {{"k", k}, {"n", n}};
  return current;
}

}  // namespace wheelramsey
