#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wheelramsey/oracle.hpp"

namespace wheelramsey::oracle {

namespace {

// Calls visit(path) for every simple path starting at `start` whose other
// vertices exceed `start`, including the one-vertex path.
template <typename Visit>
void each_path_from(const Graph& g, Vertex start, Visit&& visit) {
  std::vector<Vertex> path{start};
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  used[start] = true;
  auto rec = [&](auto&& self) -> bool {
    if (!visit(path)) return false;
    const Vertex tail = path.back();
    for (Vertex w = start + 1; w < g.order(); ++w) {
      if (used[w] || !g.adjacent(tail, w)) continue;
      used[w] = true;
      path.push_back(w);
      const bool go_on = self(self);
      path.pop_back();
      used[w] = false;
      if (!go_on) return false;
    }
    return true;
  };
  rec(rec);
}

template <typename Visit>
void each_combination(int n, int m, Visit&& visit) {
  if (m > n || m < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::map<int, std::uint64_t> cycle_census(const Graph& g) {
  std::map<int, std::uint64_t> census;
  for (Vertex s = 0; s < g.order(); ++s) {
    each_path_from(g, s, [&](const std::vector<Vertex>& path) {
      // Each cycle through its least vertex s is seen once per direction.
      if (path.size() >= 3 && path[1] < path.back() && g.adjacent(path.back(), s)) ++census[static_cast<int>(path.size())];
      return true;
    });
  }
  return census;
}

std::vector<int> cycle_lengths(const Graph& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()) + 1, false);
  int missing = std::max(0, g.order() - 2);
  for (Vertex s = 0; s < g.order() && missing > 0; ++s) {
    each_path_from(g, s, [&](const std::vector<Vertex>& path) {
      const std::size_t len = path.size();
      if (len >= 3 && !seen[len] && g.adjacent(path.back(), s)) {
        seen[len] = true;
        --missing;
      }
      return missing > 0;
    });
  }
  std::vector<int> out;
  for (int len = 3; len <= g.order(); ++len)
    if (seen[len]) out.push_back(len);
  return out;
}

bool has_cycle(const Graph& g, int length) {
  const auto lengths = cycle_lengths(g);
  return std::find(lengths.begin(), lengths.end(), length) != lengths.end();
}

std::uint64_t wheel_count(const EdgeColoring& coloring, int n, Color c) {
  if (n < 4) throw std::domain_error("wheel needs n >= 4");
  const int order = coloring.order();
  const int rim = n - 1;
  std::uint64_t count = 0;
  for (Vertex center = 0; center < order; ++center) {
    std::vector<Vertex> nb;
    for (Vertex v = 0; v < order; ++v)
      if (v != center && coloring.color(center, v) == c) nb.push_back(v);
    each_combination(static_cast<int>(nb.size()), rim, [&](const std::vector<int>& idx) {
      std::vector<Vertex> cyc;
      for (int i : idx) cyc.push_back(nb[i]);
      // cyc[0] stays first; permute the rest and keep one direction.
      do {
        if (cyc[1] > cyc.back()) continue;
        bool ok = true;
        for (int i = 0; i < rim && ok; ++i) ok = coloring.color(cyc[i], cyc[(i + 1) % rim]) == c;
        if (ok) ++count;
      } while (std::next_permutation(cyc.begin() + 1, cyc.end()));
    });
  }
  return count;
}

bool has_wheel(const EdgeColoring& coloring, int n, Color c) { return wheel_count(coloring, n, c) > 0; }

std::uint64_t dense_subset_count(const EdgeColoring& coloring, int m, int missing, Color c) {
  std::uint64_t count = 0;
  each_combination(coloring.order(), m, [&](const std::vector<int>& idx) {
    int absent = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (coloring.color(idx[i], idx[j]) != c) ++absent;
    if (absent <= missing) ++count;
  });
  return count;
}

std::uint64_t triangle_count(const EdgeColoring& coloring, Color c) { return dense_subset_count(coloring, 3, 0, c); }

std::uint64_t k4_minus_count(const EdgeColoring& coloring, Color c) { return dense_subset_count(coloring, 4, 1, c); }

TriangleScan scan_two_colorings_for_triangle(int order) {
  if (order < 1 || order > 8) throw std::domain_error("exhaustive coloring scan supports orders 1..8");
  const std::size_t pairs = pair_count(order);
  TriangleScan scan;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    std::vector<std::uint8_t> colors(pairs);
    for (std::size_t i = 0; i < pairs; ++i) colors[i] = static_cast<std::uint8_t>((bits >> i) & 1);
    EdgeColoring coloring = EdgeColoring::from_pairs(order, 2, std::move(colors));
    ++scan.colorings;
    if (triangle_count(coloring, 0) == 0 && triangle_count(coloring, 1) == 0) {
      ++scan.triangle_free;
      if (!scan.example) scan.example = coloring;
    }
  }
  return scan;
}

std::optional<int> girth(const Graph& g) {
  const auto lengths = cycle_lengths(g);
  if (lengths.empty()) return std::nullopt;
  return lengths.front();
}

int circumference(const Graph& g) {
  const auto lengths = cycle_lengths(g);
  return lengths.empty() ? 0 : lengths.back();
}

}  // namespace wheelramsey::oracle
